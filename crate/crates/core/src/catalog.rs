//! Named matroids and weight functions: the maximal simple regular matroids
//! of rank at most six, a few smaller reference matroids, and the
//! parallel-connection constructions.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::cosystole::WeightVector;
use crate::exactnum::Rational;
use crate::gf2::Gf2Matrix;
use crate::graphs::{census_msr_cographic, Graph};
use crate::matroid::{BinaryMatroid, ElementSet, MatroidError};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CatalogError {
    #[error("unknown catalog name {0:?}")]
    UnknownName(String),
    #[error("basepoint {0:?} is a loop")]
    LoopBasepoint(String),
    #[error("{0:?} is not a triangle")]
    NotATriangle(Vec<String>),
    #[error(transparent)]
    Matroid(#[from] MatroidError),
}

/// Rows `v0..v5` of the 12-element parallel connection, columns `f0..f11`.
pub const A12: [&str; 6] = [
    "110000000000",
    "101000011001",
    "000100011100",
    "000010001110",
    "000001000111",
    "000000110011",
];

/// Rows `v1..v6` of the 16-element generalized parallel connection, columns `1..16`.
pub const A16: [&str; 6] = [
    "1000001110001100",
    "0100001101001100",
    "0010001000100001",
    "0001000100010001",
    "0000100010110110",
    "0000010001110110",
];

/// Census graphs in the order `G53, G54, G1, ..., G9`.
const FROZEN_GRAPHS: &str = include_str!("../data/census_graphs.txt");

const FROZEN_ORDER: [&str; 11] = ["G53", "G54", "G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9"];

pub const NAMES: [&str; 21] = [
    "M_K4",
    "M_K5",
    "M_K6",
    "M_K7",
    "Mstar_K3",
    "Mstar_K33",
    "Mstar_G53",
    "Mstar_G54",
    "R10",
    "R12",
    "P_K3_R10",
    "R16",
    "Mstar_G1",
    "Mstar_G2",
    "Mstar_G3",
    "Mstar_G4",
    "Mstar_G5",
    "Mstar_G6",
    "Mstar_G7",
    "Mstar_G8",
    "Mstar_G9",
];

#[derive(Debug, Clone)]
pub struct CatalogEntry {
    pub name: String,
    pub matroid: BinaryMatroid,
    pub expected_sys3: Option<Rational>,
    pub expected_cogirth: Option<usize>,
    pub named_weights: Vec<(String, WeightVector)>,
}

impl CatalogEntry {
    pub fn weight(&self, name: &str) -> Option<&WeightVector> {
        self.named_weights.iter().find(|(n, _)| n == name).map(|(_, w)| w)
    }
}

fn q(n: i64, d: i64) -> Rational {
    Rational::new(n, d).expect("nonzero denominator")
}

pub fn a12_matrix() -> Gf2Matrix {
    Gf2Matrix::from_bit_strings(&A12, 12).expect("12 columns")
}

pub fn a16_matrix() -> Gf2Matrix {
    Gf2Matrix::from_bit_strings(&A16, 16).expect("16 columns")
}

/// Frozen census graph by short name (`G53`, `G54`, `G1`..`G9`).
pub fn census_graph(name: &str) -> Option<Graph> {
    let i = FROZEN_ORDER.iter().position(|&n| n == name)?;
    let graphs = Graph::parse_many(FROZEN_GRAPHS).expect("frozen graph data parses");
    graphs.into_iter().nth(i)
}

/// The graph behind a graphic or cographic entry.
pub fn entry_graph(name: &str) -> Option<Graph> {
    match name {
        "M_K4" => Some(Graph::complete(4)),
        "M_K5" => Some(Graph::complete(5)),
        "M_K6" => Some(Graph::complete(6)),
        "M_K7" => Some(Graph::complete(7)),
        "Mstar_K3" => Some(Graph::complete(3)),
        "Mstar_K33" => Some(Graph::complete_bipartite(3, 3)),
        _ => census_graph(name.strip_prefix("Mstar_")?),
    }
}

/// Census graphs labelled by the catalog rule, as `(short name, graph)`:
/// `G53`/`G54` by girth on 8 vertices; on 10 vertices `G1` has girth 5, `G7`
/// is the only graph with a triangle and at least five cycles of length at
/// most 4, and the rest fill `G2..G9` in order of cycle spectrum, then
/// canonical form.
pub fn regenerate_census_graphs() -> Vec<(String, Graph)> {
    let mut out = Vec::new();
    let eight = census_msr_cographic(8).expect("n = 8 supported");
    for girth in [3, 4] {
        let g = eight.iter().find(|g| g.girth() == Ok(girth)).expect("both girths present");
        out.push((format!("G5{girth}"), g.clone()));
    }
    let ten = census_msr_cographic(10).expect("n = 10 supported");
    let is_g7 = |g: &Graph| {
        let s = g.cycle_spectrum();
        let short: usize = s.range(..=4).map(|(_, c)| c).sum();
        s.get(&3).copied().unwrap_or(0) >= 1 && short >= 5
    };
    let g1 = ten.iter().find(|g| g.girth() == Ok(5)).expect("Petersen graph present").clone();
    let g7 = ten.iter().find(|g| is_g7(g)).expect("G7 present").clone();
    let mut rest: Vec<(Vec<(usize, usize)>, Graph)> = ten
        .into_iter()
        .filter(|g| g.girth() != Ok(5) && !is_g7(g))
        .map(|g| (g.cycle_spectrum().into_iter().collect(), g))
        .collect();
    rest.sort_by(|a, b| a.0.cmp(&b.0).then_with(|| a.1.canonical_form().cmp(&b.1.canonical_form())));
    let mut rest = rest.into_iter().map(|(_, g)| g);
    for i in 1..=9 {
        let g = match i {
            1 => g1.clone(),
            7 => g7.clone(),
            _ => rest.next().expect("nine graphs"),
        };
        out.push((format!("G{i}"), g));
    }
    out
}

/// Frozen-data text for [`regenerate_census_graphs`].
pub fn census_graphs_text(graphs: &[(String, Graph)]) -> String {
    let mut s = String::new();
    for (name, g) in graphs {
        s.push_str(&format!("# {name}\n"));
        s.push_str(&g.to_text());
    }
    s
}

fn uniform(m: &BinaryMatroid) -> (String, WeightVector) {
    ("mu_1".to_string(), WeightVector::uniform(m.len()))
}

pub fn get(name: &str) -> Result<CatalogEntry, CatalogError> {
    let unknown = || CatalogError::UnknownName(name.to_string());
    if !NAMES.contains(&name) {
        return Err(unknown());
    }
    let matroid = match name {
        "R10" => {
            let rep = a12_matrix().select_rows(&[1, 2, 3, 4, 5]).select_columns(&(2..12).collect::<Vec<_>>());
            BinaryMatroid::new(rep, (2..12).map(|i| format!("f{i}")).collect())?
        }
        "P_K3_R10" => BinaryMatroid::new(a12_matrix(), (0..12).map(|i| format!("f{i}")).collect())?,
        "R16" => BinaryMatroid::new(a16_matrix(), (1..=16).map(|i| i.to_string()).collect())?,
        "R12" => {
            let rep = a16_matrix().select_columns(&(0..12).collect::<Vec<_>>());
            BinaryMatroid::new(rep, (1..=12).map(|i| i.to_string()).collect())?
        }
        _ => {
            let g = entry_graph(name).ok_or_else(unknown)?;
            let m = if name.starts_with("M_") { g.graphic_matroid() } else { g.cographic_matroid() };
            m.map_err(|e| CatalogError::UnknownName(format!("{name}: {e}")))?
        }
    };
    let matroid = matroid.named(name);

    let expected_sys3 = match name {
        "M_K4" => Some(q(3, 2)),
        "M_K5" => Some(q(6, 5)),
        "M_K6" => Some(q(1, 1)),
        "M_K7" => Some(q(6, 7)),
        "Mstar_K33" => Some(q(4, 3)),
        "Mstar_G53" => Some(q(12, 11)),
        "Mstar_G54" => Some(q(9, 8)),
        "R10" => Some(q(6, 5)),
        "P_K3_R10" | "R16" => Some(q(12, 13)),
        "Mstar_G1" => Some(q(1, 1)),
        _ => None,
    };
    let expected_cogirth = match name {
        "M_K4" => Some(3),
        "M_K5" => Some(4),
        "M_K6" => Some(5),
        "M_K7" => Some(6),
        "Mstar_K33" | "Mstar_G54" => Some(4),
        "Mstar_G53" => Some(3),
        "Mstar_G1" => Some(5),
        "R10" => Some(4),
        _ => None,
    };

    let mut named_weights = vec![uniform(&matroid)];
    match name {
        "Mstar_G53" => named_weights.push(("mu_4_3_1".into(), mu_4_3_1(&matroid)?)),
        "Mstar_G54" => named_weights.push(("mu_1_2".into(), mu_1_2(&matroid)?)),
        "P_K3_R10" => {
            let mut pairs = vec![("f0".to_string(), q(2, 13)), ("f1".to_string(), q(2, 13)), ("f2".to_string(), q(0, 1))];
            pairs.extend((3..12).map(|i| (format!("f{i}"), q(1, 13))));
            named_weights.push(("mu_2_0_1".into(), weights(&matroid, &pairs)?));
        }
        "R16" => {
            let pairs: Vec<(String, Rational)> = (1..=16)
                .map(|i| (i.to_string(), if (8..=10).contains(&i) { q(0, 1) } else { q(1, 13) }))
                .collect();
            named_weights.push(("mu_0_8_9_10".into(), weights(&matroid, &pairs)?));
            let pairs: Vec<(String, Rational)> = (1..=16)
                .map(|i| (i.to_string(), if (13..=15).contains(&i) { q(0, 1) } else { q(1, 13) }))
                .collect();
            named_weights.push(("mu_0_13_14_15".into(), weights(&matroid, &pairs)?));
        }
        _ => {}
    }

    Ok(CatalogEntry { name: name.to_string(), matroid, expected_sys3, expected_cogirth, named_weights })
}

fn weights(m: &BinaryMatroid, pairs: &[(String, Rational)]) -> Result<WeightVector, CatalogError> {
    WeightVector::from_labels(m, pairs).map_err(|e| CatalogError::UnknownName(e.to_string()))
}

/// Edges of `g` lying in `k`-cycles, with multiplicity.
fn cycle_incidence(g: &Graph, k: usize) -> Vec<usize> {
    let mut count = vec![0; g.edge_count()];
    for c in g.cycles().into_iter().filter(|c| c.len() == k) {
        for e in c.iter() {
            count[e] += 1;
        }
    }
    count
}

/// `4/33` on the triangle, `3/33` on the remaining edges of 4-cycles, `1/33` elsewhere.
fn mu_4_3_1(m: &BinaryMatroid) -> Result<WeightVector, CatalogError> {
    let g = census_graph("G53").expect("frozen G53");
    let tri = cycle_incidence(&g, 3);
    let quad = cycle_incidence(&g, 4);
    let pairs: Vec<(String, Rational)> = (0..g.edge_count())
        .map(|e| {
            let w = if tri[e] > 0 {
                4
            } else if quad[e] > 0 {
                3
            } else {
                1
            };
            (g.labels()[e].clone(), q(w, 33))
        })
        .collect();
    weights(m, &pairs)
}

/// `2/16` on the rungs of the Moebius ladder (edges in two 4-cycles), `1/16` on the rim.
fn mu_1_2(m: &BinaryMatroid) -> Result<WeightVector, CatalogError> {
    let g = census_graph("G54").expect("frozen G54");
    let quad = cycle_incidence(&g, 4);
    let pairs: Vec<(String, Rational)> = (0..g.edge_count())
        .map(|e| (g.labels()[e].clone(), q(if quad[e] >= 2 { 2 } else { 1 }, 16)))
        .collect();
    weights(m, &pairs)
}

/// Every catalog entry, in [`NAMES`] order.
pub fn all() -> Vec<CatalogEntry> {
    NAMES.iter().map(|n| get(n).expect("catalog names resolve")).collect()
}

/// The eleven maximal simple regular matroids of rank six.
pub const RANK6_MAXIMAL: [&str; 11] = [
    "M_K7",
    "Mstar_G1",
    "Mstar_G2",
    "Mstar_G3",
    "Mstar_G4",
    "Mstar_G5",
    "Mstar_G6",
    "Mstar_G8",
    "Mstar_G9",
    "P_K3_R10",
    "R16",
];

/// Row operations turning the given independent columns into `e0, e1, ...`.
fn with_unit_columns(rep: &Gf2Matrix, cols: &[usize]) -> Option<Vec<u64>> {
    let mut rows = rep.rows().to_vec();
    for (target, &c) in cols.iter().enumerate() {
        let pivot = (target..rows.len()).find(|&r| rows[r] >> c & 1 == 1)?;
        rows.swap(target, pivot);
        for r in 0..rows.len() {
            if r != target && rows[r] >> c & 1 == 1 {
                rows[r] ^= rows[target];
            }
        }
    }
    Some(rows)
}

/// Glues `m` and `n` along `k` shared rows: `m`'s columns first, then `n`'s
/// columns outside `shared_n`.
fn glue(
    m: &BinaryMatroid,
    rows_m: &[u64],
    n: &BinaryMatroid,
    rows_n: &[u64],
    shared_n: ElementSet,
    k: usize,
) -> Result<BinaryMatroid, CatalogError> {
    let (lm, ln) = (m.len(), n.len());
    let n_cols: Vec<usize> = (0..ln).filter(|&c| !shared_n.contains(c)).collect();
    let total = lm + n_cols.len();
    let nrows = rows_m.len() + rows_n.len() - k;
    let mut out = vec![0u64; nrows];
    for (r, &row) in rows_m.iter().enumerate() {
        out[r] = row;
    }
    for (r, &row) in rows_n.iter().enumerate() {
        let target = if r < k { r } else { rows_m.len() + r - k };
        for (j, &c) in n_cols.iter().enumerate() {
            if row >> c & 1 == 1 {
                out[target] |= 1 << (lm + j);
            }
        }
    }
    let mut labels: Vec<String> = m.labels().to_vec();
    labels.extend(n_cols.iter().map(|&c| n.labels()[c].clone()));
    let rep = Gf2Matrix::from_rows(out, total).map_err(MatroidError::from)?;
    Ok(BinaryMatroid::new(rep, labels)?)
}

/// `P(M, N)` with basepoints `p_m`, `p_n` identified; keeps `p_m`'s label.
pub fn parallel_connection(m: &BinaryMatroid, n: &BinaryMatroid, p_m: &str, p_n: &str) -> Result<BinaryMatroid, CatalogError> {
    let (a, b) = (m.index_of(p_m)?, n.index_of(p_n)?);
    let rows_m = with_unit_columns(m.representation(), &[a]).ok_or_else(|| CatalogError::LoopBasepoint(p_m.into()))?;
    let rows_n = with_unit_columns(n.representation(), &[b]).ok_or_else(|| CatalogError::LoopBasepoint(p_n.into()))?;
    glue(m, &rows_m, n, &rows_n, ElementSet::singleton(b), 1)
}

/// `P_T(M, N)` across triangles `t_m`, `t_n`, identified in the given order;
/// keeps `t_m`'s labels.
pub fn generalized_parallel_connection_triangle<S: AsRef<str>>(
    m: &BinaryMatroid,
    n: &BinaryMatroid,
    t_m: &[S; 3],
    t_n: &[S; 3],
) -> Result<BinaryMatroid, CatalogError> {
    let not_triangle = |t: &[S; 3]| CatalogError::NotATriangle(t.iter().map(|s| s.as_ref().to_string()).collect());
    let rows_for = |mat: &BinaryMatroid, t: &[S; 3]| -> Result<Vec<u64>, CatalogError> {
        let idx = [mat.index_of(t[0].as_ref())?, mat.index_of(t[1].as_ref())?, mat.index_of(t[2].as_ref())?];
        let set = ElementSet::from_indices(idx);
        if set.len() != 3 || !mat.circuits().contains(&set) {
            return Err(not_triangle(t));
        }
        with_unit_columns(mat.representation(), &idx[..2]).ok_or_else(|| not_triangle(t))
    };
    let rows_m = rows_for(m, t_m)?;
    let rows_n = rows_for(n, t_n)?;
    let shared = n.set_of(t_n)?;
    glue(m, &rows_m, n, &rows_n, shared, 2)
}

/// Isomorphism classes of the simple rank-4 restrictions of `M(K5)`,
/// together with `M*(K33)`, one representative each.
pub fn rank4_simple_classes() -> Vec<BinaryMatroid> {
    let k5 = Graph::complete(5).graphic_matroid().expect("K5 is small");
    let mut classes: Vec<(usize, BTreeMap<usize, usize>, BinaryMatroid)> = Vec::new();
    let mut add = |m: BinaryMatroid| {
        let key = (m.len(), cocircuit_spectrum(&m));
        let seen = classes
            .iter()
            .any(|(n, s, c)| (*n, s) == (key.0, &key.1) && c.is_isomorphic(&m));
        if !seen {
            classes.push((key.0, key.1, m));
        }
    };
    for mask in 1u64..1 << k5.len() {
        let r = k5.restrict(ElementSet(mask));
        if r.rank() == 4 && r.is_simple() {
            add(r);
        }
    }
    add(get("Mstar_K33").expect("catalog entry").matroid);
    classes.into_iter().map(|(_, _, m)| m).collect()
}

/// Cocircuit counts by size.
pub fn cocircuit_spectrum(m: &BinaryMatroid) -> BTreeMap<usize, usize> {
    let mut s = BTreeMap::new();
    for c in m.cocircuits() {
        *s.entry(c.len()).or_insert(0) += 1;
    }
    s
}
