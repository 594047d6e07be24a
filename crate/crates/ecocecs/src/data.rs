//! Dataset container, CSV ingestion, synthetic blob generation, stratified
//! splitting, and binary relabeling for dichotomies.
//!
//! Class identifiers are strings; internally every sample carries the index
//! of its class in `class_names`, which lists the distinct identifiers in
//! first-appearance order.

use std::fmt::Write as _;
use std::fs::File;
use std::io::{BufRead, BufReader, Read, Write};
use std::path::Path;

use ndarray::{Array2, ArrayView1};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;

use crate::error::{EcocError, Result};

/// A labeled sample matrix: N samples by F real features plus one class label
/// per sample. Immutable after construction.
#[derive(Debug, Clone, PartialEq)]
pub struct Dataset {
    samples: Array2<f64>,
    labels: Vec<usize>,
    class_names: Vec<String>,
}

impl Dataset {
    /// Build a dataset from a sample matrix and one string label per row.
    /// `class_names` is derived in first-appearance order.
    pub fn new<S: AsRef<str>>(samples: Array2<f64>, labels: &[S]) -> Result<Self> {
        let mut class_names: Vec<String> = Vec::new();
        let mut indices = Vec::with_capacity(labels.len());
        for label in labels {
            let label = label.as_ref();
            let idx = match class_names.iter().position(|c| c == label) {
                Some(i) => i,
                None => {
                    class_names.push(label.to_string());
                    class_names.len() - 1
                }
            };
            indices.push(idx);
        }
        Self::with_class_names(samples, indices, class_names)
    }

    /// Build a dataset from pre-resolved class indices and an explicit class
    /// list. Every class in `class_names` must own at least one sample.
    pub fn with_class_names(
        samples: Array2<f64>,
        labels: Vec<usize>,
        class_names: Vec<String>,
    ) -> Result<Self> {
        let n = samples.nrows();
        let f = samples.ncols();
        if labels.len() != n {
            return Err(EcocError::InvalidData(format!(
                "{} labels for {} samples",
                labels.len(),
                n
            )));
        }
        if n < 2 {
            return Err(EcocError::InvalidData(format!("N<2: {n} samples")));
        }
        if f < 1 {
            return Err(EcocError::InvalidData("F<1: no features".into()));
        }
        if class_names.len() < 2 {
            return Err(EcocError::InvalidData(format!(
                "R<2: {} class(es)",
                class_names.len()
            )));
        }
        let mut seen = vec![false; class_names.len()];
        for &l in &labels {
            if l >= class_names.len() {
                return Err(EcocError::InvalidData(format!(
                    "label index {l} out of range for {} classes",
                    class_names.len()
                )));
            }
            seen[l] = true;
        }
        if let Some(empty) = seen.iter().position(|s| !s) {
            return Err(EcocError::InvalidData(format!(
                "class '{}' has no samples",
                class_names[empty]
            )));
        }
        if let Some(((r, c), v)) = samples.indexed_iter().find(|(_, v)| !v.is_finite()) {
            return Err(EcocError::InvalidData(format!(
                "non-finite value {v} at sample {r}, feature {c}"
            )));
        }
        Ok(Self {
            samples,
            labels,
            class_names,
        })
    }

    pub fn n_samples(&self) -> usize {
        self.samples.nrows()
    }

    pub fn n_features(&self) -> usize {
        self.samples.ncols()
    }

    pub fn n_classes(&self) -> usize {
        self.class_names.len()
    }

    pub fn samples(&self) -> &Array2<f64> {
        &self.samples
    }

    pub fn row(&self, i: usize) -> ArrayView1<'_, f64> {
        self.samples.row(i)
    }

    /// Class index of sample `i`.
    pub fn label(&self, i: usize) -> usize {
        self.labels[i]
    }

    /// Class name of sample `i`.
    pub fn label_name(&self, i: usize) -> &str {
        &self.class_names[self.labels[i]]
    }

    pub fn class_names(&self) -> &[String] {
        &self.class_names
    }

    pub fn class_index(&self, name: &str) -> Option<usize> {
        self.class_names.iter().position(|c| c == name)
    }

    /// Number of samples per class, indexed by class.
    pub fn class_counts(&self) -> Vec<usize> {
        let mut counts = vec![0usize; self.class_names.len()];
        for &l in &self.labels {
            counts[l] += 1;
        }
        counts
    }

    /// Row indices of samples belonging to class `k`, in row order.
    pub fn class_rows(&self, k: usize) -> Vec<usize> {
        (0..self.n_samples()).filter(|&i| self.labels[i] == k).collect()
    }

    /// New dataset keeping only the given feature columns, in the given order.
    pub fn project(&self, features: &[usize]) -> Result<Dataset> {
        if features.is_empty() {
            return Err(EcocError::InvalidArgument("empty feature selection".into()));
        }
        let mut seen = vec![false; self.n_features()];
        for &j in features {
            if j >= self.n_features() {
                return Err(EcocError::InvalidArgument(format!(
                    "feature index {j} out of range (F={})",
                    self.n_features()
                )));
            }
            if seen[j] {
                return Err(EcocError::InvalidArgument(format!(
                    "duplicate feature index {j}"
                )));
            }
            seen[j] = true;
        }
        let mut out = Array2::zeros((self.n_samples(), features.len()));
        for (c, &j) in features.iter().enumerate() {
            out.column_mut(c).assign(&self.samples.column(j));
        }
        Dataset::with_class_names(out, self.labels.clone(), self.class_names.clone())
    }

    /// New dataset keeping only the given rows, preserving this dataset's
    /// class list and ordering.
    fn select_rows(&self, rows: &[usize]) -> Result<Dataset> {
        let mut out = Array2::zeros((rows.len(), self.n_features()));
        let mut labels = Vec::with_capacity(rows.len());
        for (r, &i) in rows.iter().enumerate() {
            out.row_mut(r).assign(&self.samples.row(i));
            labels.push(self.labels[i]);
        }
        Dataset::with_class_names(out, labels, self.class_names.clone())
    }

    /// Serialize as CSV: header `f1..fF,label`, one sample per row, float
    /// cells in shortest round-trip form.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        let mut line = String::new();
        for j in 0..self.n_features() {
            let _ = write!(line, "f{},", j + 1);
        }
        line.push_str("label\n");
        w.write_all(line.as_bytes())?;
        for i in 0..self.n_samples() {
            line.clear();
            for v in self.samples.row(i) {
                let _ = write!(line, "{v},");
            }
            let _ = writeln!(line, "{}", self.label_name(i));
            w.write_all(line.as_bytes())?;
        }
        Ok(())
    }

    pub fn save_csv<P: AsRef<Path>>(&self, path: P) -> Result<()> {
        let mut file = File::create(path)?;
        self.write_csv(&mut file)
    }
}

/// Which column of a CSV file holds the class label.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub enum LabelColumn {
    /// The last column (default).
    #[default]
    Last,
    /// The column with this header name.
    Name(String),
}

/// Load a dataset from a CSV file with a header row. All non-label cells must
/// parse as finite reals.
pub fn load_csv<P: AsRef<Path>>(path: P, label_column: &LabelColumn) -> Result<Dataset> {
    let file = File::open(path)?;
    read_csv(BufReader::new(file), label_column)
}

/// Like [`load_csv`] but from any reader.
pub fn read_csv<R: Read>(reader: R, label_column: &LabelColumn) -> Result<Dataset> {
    let mut lines = BufReader::new(reader).lines();
    let header = match lines.next() {
        Some(h) => h?,
        None => return Err(EcocError::InvalidData("empty file".into())),
    };
    let columns: Vec<String> = header
        .trim_end_matches(['\r', '\n'])
        .split(',')
        .map(|c| c.trim().to_string())
        .collect();
    if columns.len() < 2 {
        return Err(EcocError::InvalidData(
            "header must name at least one feature and one label column".into(),
        ));
    }
    let label_idx = match label_column {
        LabelColumn::Last => columns.len() - 1,
        LabelColumn::Name(name) => columns
            .iter()
            .position(|c| c == name)
            .ok_or_else(|| EcocError::InvalidArgument(format!("no column named '{name}'")))?,
    };

    let mut values: Vec<f64> = Vec::new();
    let mut labels: Vec<String> = Vec::new();
    let n_features = columns.len() - 1;
    for (line_no, line) in lines.enumerate() {
        let line = line?;
        let row = line_no + 2; // 1-based, header is row 1
        let trimmed = line.trim_end_matches(['\r', '\n']);
        if trimmed.is_empty() {
            continue;
        }
        let cells: Vec<&str> = trimmed.split(',').collect();
        if cells.len() != columns.len() {
            return Err(EcocError::InvalidData(format!(
                "row {row} has {} cells, header has {}",
                cells.len(),
                columns.len()
            )));
        }
        for (c, cell) in cells.iter().enumerate() {
            if c == label_idx {
                labels.push(cell.trim().to_string());
                continue;
            }
            let v: f64 = cell.trim().parse().map_err(|_| EcocError::CsvParse {
                row,
                col: c + 1,
                name: columns[c].clone(),
                msg: format!("not a number: '{}'", cell.trim()),
            })?;
            if !v.is_finite() {
                return Err(EcocError::CsvParse {
                    row,
                    col: c + 1,
                    name: columns[c].clone(),
                    msg: format!("non-finite value: '{}'", cell.trim()),
                });
            }
            values.push(v);
        }
    }
    let n = labels.len();
    let samples = Array2::from_shape_vec((n, n_features), values)
        .map_err(|e| EcocError::InvalidData(e.to_string()))?;
    Dataset::new(samples, &labels)
}

/// Parameters for [`generate_blobs`].
#[derive(Debug, Clone, PartialEq)]
pub struct BlobSpec {
    pub classes: usize,
    pub per_class: usize,
    pub features: usize,
    /// Number of leading coordinates in which class means differ.
    pub informative: usize,
    /// Isotropic Gaussian standard deviation around each class mean.
    pub spread: f64,
    pub seed: u64,
}

/// Generate an R-class Gaussian blob dataset.
///
/// Class means differ only in the first `informative` coordinates. Each of
/// those coordinates assigns the class means a seeded random permutation of
/// `0..R`, so every pair of classes is at least unit distance apart in every
/// informative coordinate and overlap is controlled by `spread` alone.
/// Classes are named `c1..cR`; deterministic under `seed`.
pub fn generate_blobs(spec: &BlobSpec) -> Result<Dataset> {
    if spec.classes < 2 {
        return Err(EcocError::InvalidArgument("classes must be >= 2".into()));
    }
    if spec.per_class < 2 {
        return Err(EcocError::InvalidArgument("per_class must be >= 2".into()));
    }
    if spec.features < 1 {
        return Err(EcocError::InvalidArgument("features must be >= 1".into()));
    }
    if spec.informative < 1 || spec.informative > spec.features {
        return Err(EcocError::InvalidArgument(format!(
            "informative must be in 1..=features ({})",
            spec.features
        )));
    }
    if !(spec.spread > 0.0) || !spec.spread.is_finite() {
        return Err(EcocError::InvalidArgument("spread must be > 0".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(spec.seed);
    let mut centers = vec![vec![0.0f64; spec.features]; spec.classes];
    let mut levels: Vec<usize> = (0..spec.classes).collect();
    for t in 0..spec.informative {
        levels.shuffle(&mut rng);
        for (k, center) in centers.iter_mut().enumerate() {
            center[t] = levels[k] as f64;
        }
    }
    sample_around_centers(&centers, spec.per_class, spec.spread, &mut rng)
}

/// Generate Gaussian blobs around explicit class centers (class `k` is named
/// `c{k+1}`). Deterministic under `seed`.
pub fn blobs_from_centers(
    centers: &[Vec<f64>],
    per_class: usize,
    spread: f64,
    seed: u64,
) -> Result<Dataset> {
    if centers.len() < 2 {
        return Err(EcocError::InvalidArgument("need at least 2 centers".into()));
    }
    let dim = centers[0].len();
    if dim == 0 || centers.iter().any(|c| c.len() != dim) {
        return Err(EcocError::InvalidArgument(
            "centers must be non-empty and of equal dimension".into(),
        ));
    }
    if per_class < 2 {
        return Err(EcocError::InvalidArgument("per_class must be >= 2".into()));
    }
    if !(spread > 0.0) || !spread.is_finite() {
        return Err(EcocError::InvalidArgument("spread must be > 0".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    sample_around_centers(centers, per_class, spread, &mut rng)
}

fn sample_around_centers(
    centers: &[Vec<f64>],
    per_class: usize,
    spread: f64,
    rng: &mut ChaCha8Rng,
) -> Result<Dataset> {
    let classes = centers.len();
    let dim = centers[0].len();
    let mut samples = Array2::zeros((classes * per_class, dim));
    let mut labels = Vec::with_capacity(classes * per_class);
    for (k, center) in centers.iter().enumerate() {
        for s in 0..per_class {
            let row = k * per_class + s;
            for j in 0..dim {
                let z: f64 = rng.sample(StandardNormal);
                samples[[row, j]] = center[j] + spread * z;
            }
            labels.push(format!("c{}", k + 1));
        }
    }
    Dataset::new(samples, &labels)
}

/// Split into train/test with per-class stratification: each class
/// contributes `ceil(train_fraction * n_k)` samples to the training side,
/// capped so both sides keep at least one sample per class. Row order is
/// preserved within each side; deterministic under `seed`.
pub fn split_stratified(d: &Dataset, train_fraction: f64, seed: u64) -> Result<(Dataset, Dataset)> {
    if !(train_fraction > 0.0 && train_fraction < 1.0) {
        return Err(EcocError::InvalidArgument(format!(
            "train_fraction must be in (0,1), got {train_fraction}"
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut train_rows = Vec::new();
    let mut test_rows = Vec::new();
    for k in 0..d.n_classes() {
        let mut rows = d.class_rows(k);
        if rows.len() < 2 {
            return Err(EcocError::InvalidArgument(format!(
                "class '{}' has {} sample(s); need >= 2 to split",
                d.class_names()[k],
                rows.len()
            )));
        }
        let n_k = rows.len();
        let n_train = ((train_fraction * n_k as f64).ceil() as usize).min(n_k - 1).max(1);
        rows.shuffle(&mut rng);
        train_rows.extend_from_slice(&rows[..n_train]);
        test_rows.extend_from_slice(&rows[n_train..]);
    }
    train_rows.sort_unstable();
    test_rows.sort_unstable();
    Ok((d.select_rows(&train_rows)?, d.select_rows(&test_rows)?))
}

/// A dataset restricted to two disjoint class groups, with samples relabeled
/// to +1 (first group) and -1 (second group).
#[derive(Debug, Clone)]
pub struct BinaryView<'a> {
    data: &'a Dataset,
    rows: Vec<usize>,
    polarities: Vec<i8>,
}

impl<'a> BinaryView<'a> {
    /// View over explicit rows with explicit polarity labels. Both polarities
    /// must occur.
    pub fn with_polarities(data: &'a Dataset, rows: Vec<usize>, polarities: Vec<i8>) -> Result<Self> {
        if rows.len() != polarities.len() {
            return Err(EcocError::InvalidArgument(
                "rows and polarities must have equal length".into(),
            ));
        }
        if let Some(&bad) = polarities.iter().find(|&&p| p != 1 && p != -1) {
            return Err(EcocError::InvalidArgument(format!(
                "polarity must be +1 or -1, got {bad}"
            )));
        }
        if let Some(&bad) = rows.iter().find(|&&i| i >= data.n_samples()) {
            return Err(EcocError::InvalidArgument(format!(
                "row index {bad} out of range"
            )));
        }
        if !polarities.contains(&1) || !polarities.contains(&-1) {
            return Err(EcocError::InvalidArgument(
                "both polarities must occur in a binary view".into(),
            ));
        }
        Ok(Self {
            data,
            rows,
            polarities,
        })
    }

    pub fn len(&self) -> usize {
        self.rows.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn n_features(&self) -> usize {
        self.data.n_features()
    }

    pub fn point(&self, i: usize) -> ArrayView1<'_, f64> {
        self.data.row(self.rows[i])
    }

    /// Polarity (+1/-1) of view sample `i`.
    pub fn polarity(&self, i: usize) -> i8 {
        self.polarities[i]
    }

    /// Row index of view sample `i` in the underlying dataset.
    pub fn source_row(&self, i: usize) -> usize {
        self.rows[i]
    }

    pub fn dataset(&self) -> &Dataset {
        self.data
    }

    /// Counts of (+1, -1) samples.
    pub fn polarity_counts(&self) -> (usize, usize) {
        let pos = self.polarities.iter().filter(|&&p| p == 1).count();
        (pos, self.polarities.len() - pos)
    }
}

/// Restrict `d` to classes in `g1` (labeled +1) and `g2` (labeled -1),
/// preserving row order. The groups must be disjoint and non-empty.
pub fn binary_view<'a>(d: &'a Dataset, g1: &[usize], g2: &[usize]) -> Result<BinaryView<'a>> {
    validate_groups(d.n_classes(), g1, g2)?;
    let mut rows = Vec::new();
    let mut polarities = Vec::new();
    for i in 0..d.n_samples() {
        let label = d.label(i);
        if g1.contains(&label) {
            rows.push(i);
            polarities.push(1);
        } else if g2.contains(&label) {
            rows.push(i);
            polarities.push(-1);
        }
    }
    BinaryView::with_polarities(d, rows, polarities)
}

/// Check that `g1`/`g2` are non-empty, duplicate-free, disjoint class-index
/// subsets.
pub fn validate_groups(n_classes: usize, g1: &[usize], g2: &[usize]) -> Result<()> {
    if g1.is_empty() || g2.is_empty() {
        return Err(EcocError::InvalidArgument("both groups must be non-empty".into()));
    }
    for &k in g1.iter().chain(g2.iter()) {
        if k >= n_classes {
            return Err(EcocError::InvalidArgument(format!(
                "class index {k} out of range (R={n_classes})"
            )));
        }
    }
    let mut seen = vec![false; n_classes];
    for &k in g1.iter().chain(g2.iter()) {
        if seen[k] {
            return Err(EcocError::InvalidArgument(format!(
                "class index {k} appears in both groups or twice in one"
            )));
        }
        seen[k] = true;
    }
    Ok(())
}

/// Per-feature z-score standardization fitted on one dataset and applied to
/// others. Constant features are centered and left unscaled.
#[derive(Debug, Clone, PartialEq)]
pub struct Standardizer {
    means: Vec<f64>,
    scales: Vec<f64>,
}

impl Standardizer {
    pub fn fit(d: &Dataset) -> Self {
        let n = d.n_samples() as f64;
        let mut means = Vec::with_capacity(d.n_features());
        let mut scales = Vec::with_capacity(d.n_features());
        for j in 0..d.n_features() {
            let col = d.samples().column(j);
            let mean = col.sum() / n;
            let var = col.iter().map(|v| (v - mean).powi(2)).sum::<f64>() / n;
            let std = var.sqrt();
            means.push(mean);
            scales.push(if std > 0.0 { std } else { 1.0 });
        }
        Self { means, scales }
    }

    pub fn transform(&self, d: &Dataset) -> Result<Dataset> {
        if d.n_features() != self.means.len() {
            return Err(EcocError::DimensionMismatch {
                expected: self.means.len(),
                got: d.n_features(),
            });
        }
        let mut out = d.samples().clone();
        for j in 0..self.means.len() {
            out.column_mut(j).mapv_inplace(|v| (v - self.means[j]) / self.scales[j]);
        }
        Dataset::with_class_names(out, (0..d.n_samples()).map(|i| d.label(i)).collect(), d.class_names().to_vec())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use ndarray::array;

    fn three_class() -> Dataset {
        let samples = array![[0.0, 0.0], [0.1, 0.0], [5.0, 5.0], [5.1, 5.0], [9.0, 0.0], [9.1, 0.0]];
        Dataset::new(samples, &["a", "a", "b", "b", "c", "c"]).unwrap()
    }

    #[test]
    fn new_derives_first_appearance_class_order() {
        let samples = array![[0.0], [1.0], [2.0]];
        let d = Dataset::new(samples, &["A", "A", "B"]).unwrap();
        assert_eq!(d.n_samples(), 3);
        assert_eq!(d.n_classes(), 2);
        assert_eq!(d.class_names(), &["A".to_string(), "B".to_string()]);
        assert_eq!(d.label(2), 1);
    }

    #[test]
    fn read_csv_basic() {
        let csv = "g1,g2,label\n0.5,1.5,A\n0.25,2.5,A\n3.0,4.0,B\n";
        let d = read_csv(csv.as_bytes(), &LabelColumn::Last).unwrap();
        assert_eq!(d.n_samples(), 3);
        assert_eq!(d.n_features(), 2);
        assert_eq!(d.class_names(), &["A".to_string(), "B".to_string()]);
        assert_eq!(d.samples()[[1, 1]], 2.5);
    }

    #[test]
    fn read_csv_named_label_column() {
        let csv = "label,g1\nA,0.5\nB,1.5\n";
        let d = read_csv(csv.as_bytes(), &LabelColumn::Name("label".into())).unwrap();
        assert_eq!(d.n_features(), 1);
        assert_eq!(d.label_name(1), "B");
    }

    #[test]
    fn read_csv_reports_bad_cell() {
        let csv = "g1,g2,label\n0.5,oops,A\n1.0,2.0,B\n";
        let err = read_csv(csv.as_bytes(), &LabelColumn::Last).unwrap_err();
        match err {
            EcocError::CsvParse { row, col, .. } => {
                assert_eq!(row, 2);
                assert_eq!(col, 2);
            }
            other => panic!("unexpected error: {other}"),
        }
    }

    #[test]
    fn read_csv_rejects_single_class() {
        let csv = "g1,label\n0.5,A\n1.5,A\n";
        let err = read_csv(csv.as_bytes(), &LabelColumn::Last).unwrap_err();
        assert!(err.to_string().contains("R<2"), "{err}");
    }

    #[test]
    fn read_csv_rejects_singleton_file() {
        let csv = "g1,label\n0.5,A\n";
        let err = read_csv(csv.as_bytes(), &LabelColumn::Last).unwrap_err();
        assert!(err.to_string().contains("N<2"), "{err}");
    }

    #[test]
    fn csv_round_trip_is_identity() {
        let d = three_class();
        let mut buf = Vec::new();
        d.write_csv(&mut buf).unwrap();
        let back = read_csv(buf.as_slice(), &LabelColumn::Last).unwrap();
        assert_eq!(d, back);
    }

    #[test]
    fn blobs_deterministic_and_shaped() {
        let spec = BlobSpec {
            classes: 3,
            per_class: 4,
            features: 5,
            informative: 2,
            spread: 0.1,
            seed: 7,
        };
        let a = generate_blobs(&spec).unwrap();
        let b = generate_blobs(&spec).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.n_samples(), 12);
        assert_eq!(a.n_features(), 5);
        assert_eq!(a.class_names(), &["c1".to_string(), "c2".into(), "c3".into()]);
        // non-informative coordinates stay near zero for every class
        for i in 0..a.n_samples() {
            for j in 2..5 {
                assert!(a.samples()[[i, j]].abs() < 1.0);
            }
        }
    }

    #[test]
    fn blobs_reject_zero_spread() {
        let spec = BlobSpec {
            classes: 2,
            per_class: 3,
            features: 2,
            informative: 1,
            spread: 0.0,
            seed: 0,
        };
        assert!(generate_blobs(&spec).is_err());
    }

    #[test]
    fn blobs_reject_bad_dimensions() {
        let spec = BlobSpec {
            classes: 2,
            per_class: 3,
            features: 2,
            informative: 3,
            spread: 1.0,
            seed: 0,
        };
        assert!(generate_blobs(&spec).is_err());
    }

    #[test]
    fn split_counts_and_determinism() {
        let spec = BlobSpec {
            classes: 3,
            per_class: 10,
            features: 2,
            informative: 2,
            spread: 0.5,
            seed: 1,
        };
        let d = generate_blobs(&spec).unwrap();
        let (train, test) = split_stratified(&d, 0.7, 42).unwrap();
        assert_eq!(train.n_samples(), 21);
        assert_eq!(test.n_samples(), 9);
        for counts in [train.class_counts(), test.class_counts()] {
            assert_eq!(counts.len(), 3);
        }
        assert_eq!(train.class_counts(), vec![7, 7, 7]);
        assert_eq!(test.class_counts(), vec![3, 3, 3]);
        let (train2, test2) = split_stratified(&d, 0.7, 42).unwrap();
        assert_eq!(train, train2);
        assert_eq!(test, test2);
    }

    #[test]
    fn split_partitions_rows() {
        let d = three_class();
        let (train, test) = split_stratified(&d, 0.5, 3).unwrap();
        assert_eq!(train.n_samples() + test.n_samples(), d.n_samples());
        // every class keeps at least one sample on each side
        assert!(train.class_counts().iter().all(|&c| c >= 1));
        assert!(test.class_counts().iter().all(|&c| c >= 1));
    }

    #[test]
    fn split_rejects_singleton_class() {
        let samples = array![[0.0], [1.0], [2.0]];
        let d = Dataset::new(samples, &["A", "A", "B"]).unwrap();
        assert!(split_stratified(&d, 0.5, 0).is_err());
    }

    #[test]
    fn binary_view_filters_and_labels() {
        let d = three_class();
        let v = binary_view(&d, &[0], &[1]).unwrap();
        assert_eq!(v.len(), 4);
        assert_eq!(v.polarity(0), 1);
        assert_eq!(v.polarity(2), -1);
        let all = binary_view(&d, &[0, 1], &[2]).unwrap();
        assert_eq!(all.len(), 6);
        assert_eq!(all.polarity_counts(), (4, 2));
    }

    #[test]
    fn binary_view_rejects_overlap() {
        let d = three_class();
        assert!(binary_view(&d, &[0], &[0]).is_err());
        assert!(binary_view(&d, &[], &[1]).is_err());
    }

    #[test]
    fn zscore_centers_features() {
        let d = three_class();
        let std = Standardizer::fit(&d);
        let t = std.transform(&d).unwrap();
        for j in 0..t.n_features() {
            let mean: f64 = t.samples().column(j).sum() / t.n_samples() as f64;
            assert!(mean.abs() < 1e-12);
        }
    }
}
