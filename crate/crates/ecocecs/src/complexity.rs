//! Class-separability data-complexity measures.
//!
//! N2 is the ratio of summed intra-class nearest-neighbor distances to summed
//! inter-class nearest-neighbor distances; N3 is the leave-one-out error rate
//! of the 1-nearest-neighbor classifier. Both operate on a [`BinaryView`]
//! whose polarity groups play the role of classes. The per-class group
//! complexity scores drive the encoder's exchange step.

use std::fmt;
use std::str::FromStr;

use ndarray::ArrayView1;

use crate::data::{BinaryView, Dataset};
use crate::error::{EcocError, Result};

/// Which complexity measure to compute.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ComplexityKind {
    N2,
    N3,
}

impl fmt::Display for ComplexityKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ComplexityKind::N2 => write!(f, "N2"),
            ComplexityKind::N3 => write!(f, "N3"),
        }
    }
}

impl FromStr for ComplexityKind {
    type Err = EcocError;

    fn from_str(s: &str) -> Result<Self> {
        match s.to_ascii_lowercase().as_str() {
            "n2" => Ok(ComplexityKind::N2),
            "n3" => Ok(ComplexityKind::N3),
            other => Err(EcocError::InvalidArgument(format!(
                "unknown complexity measure '{other}' (expected n2 or n3)"
            ))),
        }
    }
}

/// A computed complexity value. N2 lies in `[0, inf)`, N3 in `[0, 1]`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ComplexityIndex {
    pub kind: ComplexityKind,
    pub value: f64,
}

/// Coordinate-wise mean of one class's samples.
#[derive(Debug, Clone, PartialEq)]
pub struct ClassCentroid {
    pub class: usize,
    pub center: Vec<f64>,
}

/// Nearest-neighbor distances for one sample. `intra` is `None` when the
/// sample's group has no other member.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct NnDistances {
    pub intra: Option<f64>,
    pub inter: f64,
}

/// Anything that exposes points partitioned into groups: a [`Dataset`]
/// (groups are classes) or a [`BinaryView`] (groups are polarities).
pub trait LabeledPoints {
    fn n_points(&self) -> usize;
    fn point(&self, i: usize) -> ArrayView1<'_, f64>;
    fn group(&self, i: usize) -> usize;
}

impl LabeledPoints for Dataset {
    fn n_points(&self) -> usize {
        self.n_samples()
    }

    fn point(&self, i: usize) -> ArrayView1<'_, f64> {
        self.row(i)
    }

    fn group(&self, i: usize) -> usize {
        self.label(i)
    }
}

impl LabeledPoints for BinaryView<'_> {
    fn n_points(&self) -> usize {
        self.len()
    }

    fn point(&self, i: usize) -> ArrayView1<'_, f64> {
        BinaryView::point(self, i)
    }

    fn group(&self, i: usize) -> usize {
        usize::from(self.polarity(i) < 0)
    }
}

/// Plain Euclidean distance.
pub fn euclidean(a: ArrayView1<'_, f64>, b: ArrayView1<'_, f64>) -> f64 {
    a.iter()
        .zip(b.iter())
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Distances from point `i` to its nearest neighbor inside and outside its
/// group. Errors when no point outside the group exists.
pub fn nn_distances<P: LabeledPoints>(points: &P, i: usize) -> Result<NnDistances> {
    let n = points.n_points();
    if i >= n {
        return Err(EcocError::InvalidArgument(format!(
            "sample index {i} out of range (N={n})"
        )));
    }
    let own = points.group(i);
    let x = points.point(i);
    let mut intra: Option<f64> = None;
    let mut inter: Option<f64> = None;
    for j in 0..n {
        if j == i {
            continue;
        }
        let d = euclidean(x, points.point(j));
        let slot = if points.group(j) == own { &mut intra } else { &mut inter };
        if slot.map_or(true, |cur| d < cur) {
            *slot = Some(d);
        }
    }
    let inter = inter.ok_or_else(|| {
        EcocError::InvalidArgument(format!("sample {i} has no sample outside its class"))
    })?;
    Ok(NnDistances { intra, inter })
}

/// N2: sum of intra-class nearest-neighbor distances over the sum of
/// inter-class nearest-neighbor distances. Samples whose polarity group is a
/// singleton have no intra distance and are excluded from both sums.
pub fn n2_index(view: &BinaryView<'_>) -> Result<ComplexityIndex> {
    let mut numerator = 0.0;
    let mut denominator = 0.0;
    let mut valid = 0usize;
    for i in 0..view.len() {
        let nn = nn_distances(view, i)?;
        if let Some(intra) = nn.intra {
            numerator += intra;
            denominator += nn.inter;
            valid += 1;
        }
    }
    if valid == 0 {
        return Err(EcocError::InvalidData(
            "every polarity group is a singleton; N2 undefined".into(),
        ));
    }
    let value = if denominator == 0.0 {
        if numerator == 0.0 {
            0.0
        } else {
            return Err(EcocError::DegenerateGeometry(
                "all inter-class nearest-neighbor distances are zero".into(),
            ));
        }
    } else {
        numerator / denominator
    };
    Ok(ComplexityIndex {
        kind: ComplexityKind::N2,
        value,
    })
}

/// N3: leave-one-out error rate of the 1-nearest-neighbor classifier on the
/// view's polarity labels. Distance ties break toward the lowest sample
/// index.
pub fn n3_index(view: &BinaryView<'_>) -> Result<ComplexityIndex> {
    let n = view.len();
    if n < 2 {
        return Err(EcocError::InvalidArgument(format!(
            "N3 requires at least 2 samples, got {n}"
        )));
    }
    let mut mismatches = 0usize;
    for i in 0..n {
        let x = view.point(i);
        let mut best = f64::INFINITY;
        let mut best_j = usize::MAX;
        for j in 0..n {
            if j == i {
                continue;
            }
            let d = euclidean(x, view.point(j));
            if d < best {
                best = d;
                best_j = j;
            }
        }
        if view.polarity(best_j) != view.polarity(i) {
            mismatches += 1;
        }
    }
    Ok(ComplexityIndex {
        kind: ComplexityKind::N3,
        value: mismatches as f64 / n as f64,
    })
}

/// Compute the requested measure over a view.
pub fn complexity_index(view: &BinaryView<'_>, kind: ComplexityKind) -> Result<ComplexityIndex> {
    match kind {
        ComplexityKind::N2 => n2_index(view),
        ComplexityKind::N3 => n3_index(view),
    }
}

/// Centroids (coordinate-wise sample means) of the given classes.
pub fn class_centroids(d: &Dataset, group: &[usize]) -> Result<Vec<ClassCentroid>> {
    if group.is_empty() {
        return Err(EcocError::InvalidArgument("empty class group".into()));
    }
    group.iter().map(|&k| class_centroid(d, k)).collect()
}

fn class_centroid(d: &Dataset, k: usize) -> Result<ClassCentroid> {
    if k >= d.n_classes() {
        return Err(EcocError::InvalidArgument(format!(
            "class index {k} out of range (R={})",
            d.n_classes()
        )));
    }
    let rows = d.class_rows(k);
    let mut center = vec![0.0f64; d.n_features()];
    for &i in &rows {
        for (c, v) in center.iter_mut().zip(d.row(i).iter()) {
            *c += v;
        }
    }
    let n = rows.len() as f64;
    for c in &mut center {
        *c /= n;
    }
    Ok(ClassCentroid { class: k, center })
}

fn centroid_distance(a: &ClassCentroid, b: &ClassCentroid) -> f64 {
    a.center
        .iter()
        .zip(b.center.iter())
        .map(|(x, y)| (x - y) * (x - y))
        .sum::<f64>()
        .sqrt()
}

/// Ratio score for class `k`: summed centroid distances to its own-group
/// peers over summed centroid distances to the other group. Zero when `k`
/// is alone in its group; errors when the cross-group distances sum to zero.
pub fn group_complexity_ratio(d: &Dataset, g1: &[usize], g2: &[usize], k: usize) -> Result<f64> {
    crate::data::validate_groups(d.n_classes(), g1, g2)?;
    let (own, other) = if g1.contains(&k) {
        (g1, g2)
    } else if g2.contains(&k) {
        (g2, g1)
    } else {
        return Err(EcocError::InvalidArgument(format!(
            "class {k} is in neither group"
        )));
    };
    if own.len() == 1 {
        return Ok(0.0);
    }
    let cen_k = class_centroid(d, k)?;
    let mut numerator = 0.0;
    for &l in own.iter().filter(|&&l| l != k) {
        numerator += centroid_distance(&cen_k, &class_centroid(d, l)?);
    }
    let mut denominator = 0.0;
    for &h in other {
        denominator += centroid_distance(&cen_k, &class_centroid(d, h)?);
    }
    if denominator == 0.0 {
        return Err(EcocError::DegenerateGeometry(
            "coincident centroids across groups".into(),
        ));
    }
    Ok(numerator / denominator)
}

/// Sum score for class `k`: summed centroid distances to its own-group
/// peers. Zero when `k` is alone in its group.
pub fn group_complexity_sum(d: &Dataset, g: &[usize], k: usize) -> Result<f64> {
    if !g.contains(&k) {
        return Err(EcocError::InvalidArgument(format!(
            "class {k} is not in the group"
        )));
    }
    let cen_k = class_centroid(d, k)?;
    let mut sum = 0.0;
    for &l in g.iter().filter(|&&l| l != k) {
        sum += centroid_distance(&cen_k, &class_centroid(d, l)?);
    }
    Ok(sum)
}
