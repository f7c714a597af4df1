//! Brute-force oracles and structural laws for gf2 and matroid.

use std::collections::BTreeSet;

use cosys::catalog::{self, A12, A16};
use cosys::graphs::Graph;
use cosys::{BinaryMatroid, ElementSet, Gf2Matrix};

/// Minimal supports of nonzero row-space vectors by pairwise subset tests.
fn pairwise_minimal(m: &BinaryMatroid) -> BTreeSet<u64> {
    let vs = m.representation().row_space_vectors();
    vs.iter()
        .filter(|&&v| !vs.iter().any(|&w| w != v && w & v == w))
        .copied()
        .collect()
}

/// Plain Gaussian elimination on bit strings, written out separately.
fn oracle_rank(rows: &[&str]) -> usize {
    let mut m: Vec<Vec<u8>> = rows.iter().map(|r| r.bytes().map(|b| b - b'0').collect()).collect();
    let mut rank = 0;
    for c in 0..m.first().map_or(0, Vec::len) {
        if let Some(p) = (rank..m.len()).find(|&r| m[r][c] == 1) {
            m.swap(rank, p);
            for r in 0..m.len() {
                if r != rank && m[r][c] == 1 {
                    let pivot = m[rank].clone();
                    for (x, y) in m[r].iter_mut().zip(pivot) {
                        *x ^= y;
                    }
                }
            }
            rank += 1;
        }
    }
    rank
}

/// Minimal edge cuts (bonds) of a connected graph from vertex bipartitions.
fn bonds(g: &Graph) -> BTreeSet<u64> {
    let n = g.vertex_count();
    let mut cuts = BTreeSet::new();
    for s in 1u64..(1 << (n - 1)) {
        let mut cut = 0u64;
        for (i, &(u, v)) in g.edges().iter().enumerate() {
            if (s >> u & 1) != (s >> v & 1) {
                cut |= 1 << i;
            }
        }
        cuts.insert(cut);
    }
    cuts.iter().filter(|&&c| !cuts.iter().any(|&d| d != c && d & c == d)).copied().collect()
}

fn catalog_matroids() -> Vec<BinaryMatroid> {
    catalog::all().into_iter().map(|e| e.matroid).collect()
}

#[test]
fn paper_matrix_ranks() {
    assert_eq!(oracle_rank(&A12), 6);
    assert_eq!(catalog::a12_matrix().rank(), 6);
    let r10: Vec<String> = A12[1..].iter().map(|r| r[2..].to_string()).collect();
    let r10: Vec<&str> = r10.iter().map(String::as_str).collect();
    assert_eq!(oracle_rank(&r10), 5);
    assert_eq!(catalog::get("R10").unwrap().matroid.rank(), 5);
    assert_eq!(oracle_rank(&A16), 6);
    assert_eq!(catalog::get("R16").unwrap().matroid.rank(), 6);
    let (b, perm) = catalog::a16_matrix().standard_form().unwrap();
    assert_eq!(perm, (0..16).collect::<Vec<_>>());
    assert_eq!(b, catalog::a16_matrix());
}

#[test]
fn row_space_and_duals_of_catalog() {
    for m in catalog_matroids() {
        let rep = m.representation();
        let vs = rep.row_space_vectors();
        assert_eq!(vs.len(), (1 << rep.rank()) - 1);
        assert_eq!(vs.iter().collect::<BTreeSet<_>>().len(), vs.len());
        let d = rep.dual_representation().unwrap();
        assert!(d.is_orthogonal_to(rep));
        assert_eq!(d.rank() + rep.rank(), rep.ncols());
        assert!(d.dual_representation().unwrap().same_row_space(rep));
        let (b, perm) = rep.standard_form().unwrap();
        let mut inverse = vec![0; perm.len()];
        for (i, &p) in perm.iter().enumerate() {
            inverse[p] = i;
        }
        assert!(b.permute_columns(&inverse).same_row_space(rep));
    }
    let z = Gf2Matrix::zeros(2, 5).unwrap();
    assert!(z.row_space_vectors().is_empty());
}

#[test]
fn cocircuits_match_pairwise_oracle() {
    for m in catalog_matroids() {
        let ours: BTreeSet<u64> = m.cocircuits().iter().map(|c| c.0).collect();
        assert_eq!(ours, pairwise_minimal(&m), "{:?}", m.name());
        assert!(m.cocircuits().len() < 1 << m.rank());
        let sorted = m.cocircuits().windows(2).all(|w| w[0].canonical_cmp(w[1]).is_lt());
        assert!(sorted);
    }
}

#[test]
fn graphic_cocircuits_are_bonds() {
    for g in [Graph::complete(4), Graph::complete(5), Graph::complete_bipartite(3, 3), Graph::complete(7)] {
        let m = g.graphic_matroid().unwrap();
        let ours: BTreeSet<u64> = m.cocircuits().iter().map(|c| c.0).collect();
        assert_eq!(ours, bonds(&g));
    }
    let k4 = Graph::complete(4).graphic_matroid().unwrap();
    let sizes: Vec<usize> = k4.cocircuits().iter().map(|c| c.len()).collect();
    assert_eq!(sizes, vec![3, 3, 3, 3, 4, 4, 4]);
    let circuit_sizes: Vec<usize> = k4.circuits().iter().map(|c| c.len()).collect();
    assert_eq!(circuit_sizes, vec![3, 3, 3, 3, 4, 4, 4]);
    // circuits of M*(K33) are the bonds of K33
    let k33 = Graph::complete_bipartite(3, 3);
    let star = catalog::get("Mstar_K33").unwrap().matroid;
    assert_eq!(star.circuits().iter().map(|c| c.0).collect::<BTreeSet<_>>(), bonds(&k33));
    assert_eq!(star.rank(), 4);
    assert_eq!(k33.graphic_matroid().unwrap().dual().cocircuits(), star.cocircuits());
}

#[test]
fn named_cocircuits_of_r16() {
    let m = catalog::get("R16").unwrap().matroid;
    for s in [["3", "7", "11", "16"], ["4", "8", "12", "16"], ["1", "2", "9", "10"], ["5", "6", "9", "10"], ["1", "2", "5", "6"]] {
        assert!(m.cocircuits().contains(&m.set_of(&s).unwrap()), "{s:?}");
    }
    let single = BinaryMatroid::with_numeric_labels(Gf2Matrix::identity(1).unwrap()).unwrap();
    assert_eq!(single.cocircuits(), &[ElementSet(1)]);
    assert!(single.dual().cocircuits().is_empty());
    assert!(single.dual().is_loop(0).unwrap());
}

#[test]
fn antichain_duality_and_minor_laws() {
    for m in catalog_matroids() {
        let cs = m.cocircuits();
        for &a in cs {
            assert!(!cs.iter().any(|&b| b != a && b.is_subset(a)));
        }
        assert_eq!(m.dual().dual().cocircuits(), cs);
        assert_eq!(m.circuits(), m.dual().cocircuits().to_vec());
        for e in 0..m.len() {
            let others: Vec<usize> = (0..m.len()).filter(|&i| i != e).collect();
            let lift = |d: ElementSet| ElementSet::from_indices(d.iter().map(|i| others[i]));
            let del = m.delete(e).unwrap();
            for &d in del.cocircuits() {
                let d = lift(d);
                assert!(cs.iter().any(|&c| d.is_subset(c.difference(ElementSet::singleton(e)))));
            }
            let con = m.contract(e).unwrap();
            if !m.is_loop(e).unwrap() {
                assert_eq!(con.rank() + 1, m.rank());
            }
            for &d in con.cocircuits() {
                let d = lift(d);
                assert!(cs.contains(&d) && !d.contains(e));
            }
        }
    }
}

#[test]
fn delete_and_contract_commute() {
    let m = catalog::get("R10").unwrap().matroid;
    for e in m.labels() {
        for f in m.labels().iter().filter(|f| *f != e) {
            let a = m.delete_label(e).unwrap().contract_label(f).unwrap();
            let b = m.contract_label(f).unwrap().delete_label(e).unwrap();
            assert_eq!(a.labels(), b.labels());
            assert_eq!(a.cocircuits(), b.cocircuits());
        }
    }
    let k4 = Graph::complete(4).graphic_matroid().unwrap();
    let c = k4.contract(0).unwrap();
    assert_eq!((c.rank(), c.len()), (2, 5));
}

#[test]
fn cogirth_examples() {
    assert_eq!(catalog::get("Mstar_G1").unwrap().matroid.cogirth().unwrap(), 5);
    assert_eq!(catalog::get("R10").unwrap().matroid.cogirth().unwrap(), 4);
    assert_eq!(catalog::get("M_K7").unwrap().matroid.cogirth().unwrap(), 6);
    for e in catalog::all() {
        if let Some(g) = e.expected_cogirth {
            assert_eq!(e.matroid.cogirth().unwrap(), g, "{}", e.name);
        }
    }
    let r10_sizes: BTreeSet<usize> = catalog::get("R10").unwrap().matroid.cocircuits().iter().map(|c| c.len()).collect();
    assert_eq!(r10_sizes, BTreeSet::from([4, 6]));
}

#[test]
fn simplification_examples() {
    let k4 = Graph::complete(4).graphic_matroid().unwrap();
    let (s, kept) = k4.simplify();
    assert_eq!(s.cocircuits(), k4.cocircuits());
    assert_eq!(kept, (0..6).collect::<Vec<_>>());
    let p = catalog::get("P_K3_R10").unwrap().matroid;
    assert!(p.is_simple());
    let k3 = Graph::complete(3).graphic_matroid().unwrap();
    let rep = k3.representation();
    let doubled = Gf2Matrix::from_rows(rep.rows().iter().map(|&r| r | (r & 1) << 3).collect(), 4).unwrap();
    let m = BinaryMatroid::new(doubled, vec!["a".into(), "b".into(), "c".into(), "a2".into()]).unwrap();
    assert_eq!(m.parallel_classes(), vec![vec![0, 3], vec![1], vec![2]]);
    let (s, kept) = m.simplify();
    assert_eq!(kept, vec![0, 1, 2]);
    assert!(s.is_isomorphic(&k3));
}

#[test]
fn isomorphism_examples() {
    let r16 = catalog::get("R16").unwrap().matroid;
    let g7 = catalog::get("Mstar_G7").unwrap().matroid;
    let d = r16.delete_label("7").unwrap();
    let phi = d.isomorphism(&g7).expect("R16 minus 7 is M*(G7)");
    let mapped: BTreeSet<u64> = d
        .cocircuits()
        .iter()
        .map(|c| ElementSet::from_indices(c.iter().map(|e| phi[e])).0)
        .collect();
    assert_eq!(mapped, g7.cocircuits().iter().map(|c| c.0).collect());
    let g53 = catalog::get("Mstar_G53").unwrap().matroid;
    let g54 = catalog::get("Mstar_G54").unwrap().matroid;
    assert!(!g53.is_isomorphic(&g54));
    assert_eq!(r16.isomorphism(&r16).map(|p| p.len()), Some(16));
}
