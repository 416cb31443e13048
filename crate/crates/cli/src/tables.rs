//! CSV renderings laid out like the published tables.

use lrp_core::reflexive::hexagon_classes_3k;

use crate::record::ClassificationTable;
use crate::CliError;

const BLOCK: usize = 15;

fn join<T: ToString>(xs: &[T]) -> String {
    xs.iter()
        .map(|x| x.to_string())
        .collect::<Vec<_>>()
        .join(",")
}

/// Two-row blocks of at most fifteen columns: a header row of indices and a
/// row of values.
fn horizontal(key: &str, label: &str, cols: &[(i64, usize)]) -> String {
    let mut out = String::new();
    for chunk in cols.chunks(BLOCK) {
        let ks: Vec<i64> = chunk.iter().map(|c| c.0).collect();
        let vs: Vec<usize> = chunk.iter().map(|c| c.1).collect();
        out.push_str(&format!("{key},{}\n{label},{}\n", join(&ks), join(&vs)));
    }
    out
}

/// `n(l)` for odd `l` in the table.
pub fn counts_csv(t: &ClassificationTable) -> String {
    let cols: Vec<(i64, usize)> = t
        .rows
        .iter()
        .filter(|(l, _)| *l % 2 == 1)
        .map(|(&l, r)| (l, r.count))
        .collect();
    horizontal("l", "n(l)", &cols)
}

/// `s(l)` for odd `l` in the table.
pub fn self_dual_csv(t: &ClassificationTable) -> String {
    let cols: Vec<(i64, usize)> = t
        .rows
        .iter()
        .filter(|(l, _)| *l % 2 == 1)
        .map(|(&l, r)| (l, r.self_dual))
        .collect();
    horizontal("l", "s(l)", &cols)
}

/// `n(3k)` for odd `k`, as one block.
pub fn three_k_csv(t: &ClassificationTable) -> String {
    let (ks, vs): (Vec<i64>, Vec<usize>) = t
        .rows
        .iter()
        .filter(|(l, _)| *l % 6 == 3)
        .map(|(&l, r)| (l / 3, r.count))
        .unzip();
    format!("k,{}\nn(3k),{}\n", join(&ks), join(&vs))
}

/// Distinct orders per odd index, one row per index.
pub fn orders_csv(t: &ClassificationTable) -> String {
    let mut out = String::from("l,o_P\n");
    for (l, row) in t.rows.iter().filter(|(l, _)| *l % 2 == 1) {
        let mut orders: Vec<i64> = row.records.iter().map(|r| r.order).collect();
        orders.sort_unstable();
        orders.dedup();
        out.push_str(&format!("{l},\"{}\"\n", join(&orders)));
    }
    out
}

/// Smallest `i` of each class of `3k`-reflexive hexagons, for odd `k ≤ max_k`.
pub fn hexagon_i_csv(max_k: i64) -> Result<String, CliError> {
    let mut out = String::from("k,i\n");
    for k in (1..=max_k).step_by(2) {
        out.push_str(&format!("{k},\"{}\"\n", join(&hexagon_classes_3k(k)?)));
    }
    Ok(out)
}
