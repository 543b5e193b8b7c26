//! Small vector and index helpers shared across modules.

use crate::scalar::Scalar;

/// Flat index of `(i, j)` in a tensor-square ordering with second
/// dimension `d2` (first factor major).
pub fn pair(i: usize, j: usize, d2: usize) -> usize {
    i * d2 + j
}

pub fn unpair(idx: usize, d2: usize) -> (usize, usize) {
    (idx / d2, idx % d2)
}

pub fn vec_is_zero(v: &[Scalar]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn vec_add_assign(a: &mut [Scalar], b: &[Scalar]) {
    debug_assert_eq!(a.len(), b.len());
    for (x, y) in a.iter_mut().zip(b) {
        *x += y;
    }
}

pub fn vec_sub(a: &[Scalar], b: &[Scalar]) -> Vec<Scalar> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(v: &[Scalar], k: &Scalar) -> Vec<Scalar> {
    v.iter().map(|x| x * k).collect()
}

pub fn vec_add_scaled(a: &mut [Scalar], b: &[Scalar], k: &Scalar) {
    debug_assert_eq!(a.len(), b.len());
    if k.is_zero() {
        return;
    }
    for (x, y) in a.iter_mut().zip(b) {
        *x += &(y * k);
    }
}

/// Scales a vector so its first nonzero coordinate is 1. Returns `None`
/// for the zero vector.
pub fn normalize_first_one(v: &[Scalar]) -> Option<Vec<Scalar>> {
    let lead = v.iter().find(|x| !x.is_zero())?;
    let inv = lead.inv().expect("nonzero leading coefficient");
    Some(vec_scale(v, &inv))
}

/// Formats a coordinate vector as a combination of basis labels, for
/// witnesses and report notes.
pub fn fmt_combo(coords: &[Scalar], labels: &[String]) -> String {
    let terms: Vec<String> = coords
        .iter()
        .zip(labels)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| {
            if c.is_one() {
                l.clone()
            } else {
                format!("{c}*{l}")
            }
        })
        .collect();
    if terms.is_empty() {
        "0".into()
    } else {
        terms.join(" + ")
    }
}
