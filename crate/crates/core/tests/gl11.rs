use glkm::gl11::{
    enumerate_ssyt, highest_weight_kernel, hook_shape, hw_module_suite, kernel_dimension_check, ssyt_bijection,
    tensor_decompose, verify_fund1, verify_orthogonality, xx_hamiltonian_check, Tableau,
};

/// Independent validity test: every adjacent pair in a row or column is
/// checked against the two sign rules directly.
fn oracle_valid(t: &Tableau, k: usize) -> bool {
    let bos = |v: usize| v <= k;
    for row in &t.rows {
        for w in row.windows(2) {
            let ok = if bos(w[1]) && bos(w[0]) { w[0] <= w[1] } else { w[0] < w[1] || (w[0] == w[1] && bos(w[0])) };
            if !ok {
                return false;
            }
        }
    }
    for r in 1..t.rows.len() {
        for c in 0..t.rows[r].len() {
            let (a, b) = (t.rows[r - 1][c], t.rows[r][c]);
            let ok = if !bos(a) && !bos(b) { a <= b } else { a < b };
            if !ok {
                return false;
            }
        }
    }
    true
}

fn all_fillings(n: usize, shape: &[usize]) -> Vec<Tableau> {
    let size: usize = shape.iter().sum();
    let mut out = Vec::new();
    for code in 0..n.pow(size as u32) {
        let mut digits: Vec<usize> = (0..size).map(|i| code / n.pow((size - 1 - i) as u32) % n + 1).collect();
        let mut rows = Vec::new();
        for &len in shape {
            rows.push(digits.drain(..len).collect());
        }
        out.push(Tableau { shape: shape.to_vec(), rows });
    }
    out
}

#[test]
fn ssyt_matches_exhaustive_oracle() {
    let shapes: &[&[usize]] = &[&[2, 1], &[2, 2], &[3], &[1, 1, 1], &[3, 1], &[2, 1, 1], &[3, 2], &[2, 2, 1]];
    for (n, k) in [(2, 1), (3, 1), (3, 2)] {
        for shape in shapes {
            let brute: Vec<Tableau> = all_fillings(n, shape).into_iter().filter(|t| oracle_valid(t, k)).collect();
            assert_eq!(enumerate_ssyt(n, k, shape).unwrap(), brute, "n={n} k={k} {shape:?}");
        }
    }
}

#[test]
fn non_hook_shapes_are_empty_for_gl11() {
    for shape in [vec![2, 2], vec![3, 2], vec![2, 2, 1], vec![3, 3]] {
        assert!(enumerate_ssyt(2, 1, &shape).unwrap().is_empty(), "{shape:?}");
    }
}

#[test]
fn hook_counts_up_to_eight_sites() {
    for sites in 1..=8 {
        for p in 0..sites {
            assert_eq!(enumerate_ssyt(2, 1, &hook_shape(sites, p)).unwrap().len(), 2);
            assert!(ssyt_bijection(sites, p).unwrap().report.passed);
        }
    }
}

#[test]
fn bijection_golden_files() {
    let dir = concat!(env!("CARGO_MANIFEST_DIR"), "/tests/golden");
    for (sites, p) in [(3, 1), (2, 0), (4, 3), (5, 2)] {
        let want = std::fs::read_to_string(format!("{dir}/ssyt_N{sites}_p{p}.txt")).unwrap();
        assert_eq!(ssyt_bijection(sites, p).unwrap().to_ascii(), want, "N={sites} p={p}");
    }
}

#[test]
fn xx_identity_up_to_six_sites() {
    for sites in 2..=6 {
        let r = xx_hamiltonian_check(sites).unwrap();
        assert!(r.passed, "{:?}", r.witnesses);
    }
}

#[test]
fn random_hw_modules() {
    let r = hw_module_suite(20, 2024);
    assert!(r.passed, "{:?}", r.witnesses);
    assert!(r.identities >= 20 * 12);
}

#[test]
fn kernel_modules_up_to_six_sites() {
    for sites in 1..=6 {
        assert!(kernel_dimension_check(sites).unwrap().passed);
        for p in 0..sites {
            for w in highest_weight_kernel(sites, p).unwrap() {
                let r = verify_fund1(&w).unwrap();
                assert!(r.passed, "N={sites} p={p}: {:?}", r.witnesses);
            }
            if p + 2 <= sites {
                assert!(verify_orthogonality(sites, p).unwrap().passed);
            }
        }
    }
}

#[test]
fn decompositions() {
    for (n1, n2) in [(1, 1), (2, 1), (2, 2), (1, 2)] {
        for p1 in 0..n1 {
            for p2 in 0..n2 {
                for a in highest_weight_kernel(n1, p1).unwrap() {
                    for b in highest_weight_kernel(n2, p2).unwrap() {
                        let d = tensor_decompose(&a, &b).unwrap();
                        assert!(d.report.passed, "{}: {:?}", d.report.name, d.report.witnesses);
                    }
                }
            }
        }
    }
}
