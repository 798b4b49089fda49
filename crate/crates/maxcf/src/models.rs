//! Catalog of nonnegative integrable random-vector models: generators of
//! D-norms (constant, random permutation, scaled Fréchet) and example
//! distributions (GPD, uniform, multivariate GPD) with reproducible
//! samplers and, where available, closed-form cdf / survival / max-CF /
//! quantile handles.

use crate::error::{Error, Result};
use crate::rng::{self, open_unit};
use crate::special::gamma;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::io::Write;
use std::sync::Arc;

/// Generalized Pareto parameters. The shape is restricted to (0, 1) so the
/// distribution has a finite mean.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct GpdParams {
    pub mu: f64,
    pub sigma: f64,
    pub xi: f64,
}

impl GpdParams {
    pub fn new(mu: f64, sigma: f64, xi: f64) -> Result<Self> {
        if !(mu >= 0.0) {
            return Err(Error::InvalidParameter(format!(
                "gpd location mu must be >= 0, got {mu}"
            )));
        }
        if !(sigma > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "gpd scale sigma must be > 0, got {sigma}"
            )));
        }
        if !(xi > 0.0 && xi < 1.0) {
            return Err(Error::InvalidParameter(format!(
                "gpd shape xi must lie in (0, 1), got {xi}"
            )));
        }
        Ok(Self { mu, sigma, xi })
    }

    pub fn mean(&self) -> f64 {
        self.mu + self.sigma / (1.0 - self.xi)
    }
}

/// Declarative model specification; serializes as `{"kind": ..., "params": {...}}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", content = "params", rename_all = "kebab-case")]
#[serde(deny_unknown_fields)]
pub enum ModelKind {
    Constant { dim: usize },
    Permutation { dim: usize },
    Frechet { dim: usize, lambda: f64 },
    Gpd { mu: f64, sigma: f64, xi: f64 },
    Uniform { upper: f64 },
    Mgpd { alpha: f64, bound: f64, generator: Box<ModelKind> },
}

/// An n-by-d matrix of nonnegative draws, stored row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct EmpiricalSample {
    data: Vec<f64>,
    n: usize,
    dim: usize,
}

impl EmpiricalSample {
    pub fn new(data: Vec<f64>, n: usize, dim: usize) -> Result<Self> {
        if n == 0 || dim == 0 {
            return Err(Error::InvalidParameter(
                "sample requires n >= 1 and dim >= 1".into(),
            ));
        }
        if data.len() != n * dim {
            return Err(Error::InvalidParameter(format!(
                "sample storage has {} entries, expected {}",
                data.len(),
                n * dim
            )));
        }
        if data.iter().any(|v| !(*v >= 0.0)) {
            return Err(Error::InvalidParameter(
                "sample entries must be nonnegative".into(),
            ));
        }
        Ok(Self { data, n, dim })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn row(&self, i: usize) -> &[f64] {
        &self.data[i * self.dim..(i + 1) * self.dim]
    }

    pub fn rows(&self) -> impl Iterator<Item = &[f64]> {
        self.data.chunks(self.dim)
    }

    pub fn column(&self, j: usize) -> impl Iterator<Item = f64> + '_ {
        self.data.iter().skip(j).step_by(self.dim).copied()
    }

    pub fn column_mean(&self, j: usize) -> f64 {
        self.column(j).sum::<f64>() / self.n as f64
    }

    /// CLT standard error of the column mean.
    pub fn column_mean_se(&self, j: usize) -> f64 {
        let mean = self.column_mean(j);
        let var = self.column(j).map(|v| (v - mean) * (v - mean)).sum::<f64>()
            / (self.n as f64 - 1.0).max(1.0);
        (var / self.n as f64).sqrt()
    }

    /// Fraction of rows componentwise below `point`.
    pub fn empirical_cdf(&self, point: &[f64]) -> f64 {
        let hits = self
            .rows()
            .filter(|row| row.iter().zip(point).all(|(v, p)| v <= p))
            .count();
        hits as f64 / self.n as f64
    }

    /// CSV with header `z1,...,zd` and 15 significant digits per entry.
    pub fn write_csv<W: Write>(&self, out: &mut W) -> std::io::Result<()> {
        let header: Vec<String> = (1..=self.dim).map(|j| format!("z{j}")).collect();
        writeln!(out, "{}", header.join(","))?;
        for row in self.rows() {
            let cells: Vec<String> = row.iter().map(|v| format!("{v:.14e}")).collect();
            writeln!(out, "{}", cells.join(","))?;
        }
        Ok(())
    }
}

type SamplerFn = dyn Fn(u64, usize) -> EmpiricalSample + Send + Sync;
type PointFn = dyn Fn(&[f64]) -> Result<f64> + Send + Sync;
type ScalarFn = dyn Fn(f64) -> Result<f64> + Send + Sync;

struct ModelInner {
    label: String,
    kind: Option<ModelKind>,
    dim: usize,
    means: Vec<f64>,
    is_unit_mean: bool,
    sampler: Box<SamplerFn>,
    cdf: Option<Box<PointFn>>,
    survival: Option<Box<PointFn>>,
    maxcf_closed: Option<Box<PointFn>>,
    quantile: Option<Box<ScalarFn>>,
}

/// Immutable model handle; cheap to clone and safe to share across threads.
#[derive(Clone)]
pub struct RandomVectorModel {
    inner: Arc<ModelInner>,
}

impl std::fmt::Debug for RandomVectorModel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("RandomVectorModel")
            .field("label", &self.inner.label)
            .field("dim", &self.inner.dim)
            .field("means", &self.inner.means)
            .finish()
    }
}

/// Builder for custom models (experiment-specific distributions, test
/// fixtures). Catalog models come from the dedicated constructors.
pub struct ModelBuilder {
    label: String,
    kind: Option<ModelKind>,
    dim: usize,
    means: Option<Vec<f64>>,
    sampler: Option<Box<SamplerFn>>,
    cdf: Option<Box<PointFn>>,
    survival: Option<Box<PointFn>>,
    maxcf_closed: Option<Box<PointFn>>,
    quantile: Option<Box<ScalarFn>>,
}

impl ModelBuilder {
    pub fn new(dim: usize, label: impl Into<String>) -> Self {
        Self {
            label: label.into(),
            kind: None,
            dim,
            means: None,
            sampler: None,
            cdf: None,
            survival: None,
            maxcf_closed: None,
            quantile: None,
        }
    }

    pub fn kind(mut self, kind: ModelKind) -> Self {
        self.kind = Some(kind);
        self
    }

    pub fn means(mut self, means: Vec<f64>) -> Self {
        self.means = Some(means);
        self
    }

    pub fn sampler<F>(mut self, f: F) -> Self
    where
        F: Fn(u64, usize) -> EmpiricalSample + Send + Sync + 'static,
    {
        self.sampler = Some(Box::new(f));
        self
    }

    pub fn cdf<F>(mut self, f: F) -> Self
    where
        F: Fn(&[f64]) -> Result<f64> + Send + Sync + 'static,
    {
        self.cdf = Some(Box::new(f));
        self
    }

    pub fn survival<F>(mut self, f: F) -> Self
    where
        F: Fn(&[f64]) -> Result<f64> + Send + Sync + 'static,
    {
        self.survival = Some(Box::new(f));
        self
    }

    pub fn maxcf_closed_form<F>(mut self, f: F) -> Self
    where
        F: Fn(&[f64]) -> Result<f64> + Send + Sync + 'static,
    {
        self.maxcf_closed = Some(Box::new(f));
        self
    }

    pub fn quantile<F>(mut self, f: F) -> Self
    where
        F: Fn(f64) -> Result<f64> + Send + Sync + 'static,
    {
        self.quantile = Some(Box::new(f));
        self
    }

    pub fn build(self) -> Result<RandomVectorModel> {
        if self.dim == 0 {
            return Err(Error::InvalidDimension("dim must be >= 1".into()));
        }
        let means = self
            .means
            .ok_or_else(|| Error::InvalidParameter("model needs means".into()))?;
        if means.len() != self.dim {
            return Err(Error::DimensionMismatch {
                expected: self.dim,
                got: means.len(),
            });
        }
        if means.iter().any(|m| !(*m >= 0.0) || !m.is_finite()) {
            return Err(Error::InvalidParameter(
                "means must be finite and nonnegative".into(),
            ));
        }
        let sampler = self
            .sampler
            .ok_or_else(|| Error::InvalidParameter("model needs a sampler".into()))?;
        let is_unit_mean = means.iter().all(|&m| m == 1.0);
        Ok(RandomVectorModel {
            inner: Arc::new(ModelInner {
                label: self.label,
                kind: self.kind,
                dim: self.dim,
                means,
                is_unit_mean,
                sampler,
                cdf: self.cdf,
                survival: self.survival,
                maxcf_closed: self.maxcf_closed,
                quantile: self.quantile,
            }),
        })
    }
}

impl RandomVectorModel {
    pub fn label(&self) -> &str {
        &self.inner.label
    }

    pub fn kind(&self) -> Option<&ModelKind> {
        self.inner.kind.as_ref()
    }

    pub fn dim(&self) -> usize {
        self.inner.dim
    }

    pub fn means(&self) -> &[f64] {
        &self.inner.means
    }

    pub fn is_unit_mean(&self) -> bool {
        self.inner.is_unit_mean
    }

    pub fn has_cdf(&self) -> bool {
        self.inner.cdf.is_some()
    }

    pub fn has_closed_maxcf(&self) -> bool {
        self.inner.maxcf_closed.is_some()
    }

    pub fn has_quantile(&self) -> bool {
        self.inner.quantile.is_some()
    }

    fn check_dim(&self, x: &[f64]) -> Result<()> {
        if x.len() != self.inner.dim {
            return Err(Error::DimensionMismatch {
                expected: self.inner.dim,
                got: x.len(),
            });
        }
        Ok(())
    }

    /// Draw `n` rows with the given seed. Deterministic, chunked, parallel.
    pub fn sample(&self, seed: u64, n: usize) -> Result<EmpiricalSample> {
        if n == 0 {
            return Err(Error::InvalidParameter("sample size must be >= 1".into()));
        }
        Ok((self.inner.sampler)(seed, n))
    }

    pub fn cdf(&self, x: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        match &self.inner.cdf {
            Some(f) => f(x),
            None => Err(Error::MissingCdf),
        }
    }

    /// `1 - cdf(x)` evaluated without cancellation where the model provides
    /// a dedicated tail handle; falls back to `1 - cdf` otherwise.
    pub fn survival(&self, x: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        if let Some(f) = &self.inner.survival {
            return f(x);
        }
        match &self.inner.cdf {
            Some(f) => Ok(1.0 - f(x)?),
            None => Err(Error::MissingCdf),
        }
    }

    pub fn maxcf_closed_form(&self, x: &[f64]) -> Result<f64> {
        self.check_dim(x)?;
        if x.iter().any(|v| *v < 0.0) {
            return Err(Error::OutOfDomain(
                "max-CF arguments must be nonnegative".into(),
            ));
        }
        match &self.inner.maxcf_closed {
            Some(f) => f(x),
            None => Err(Error::MissingClosedForm),
        }
    }

    pub fn quantile(&self, alpha: f64) -> Result<f64> {
        if !(alpha > 0.0 && alpha < 1.0) {
            return Err(Error::OutOfDomain(format!(
                "quantile level must lie in (0, 1), got {alpha}"
            )));
        }
        match &self.inner.quantile {
            Some(f) => f(alpha),
            None => Err(Error::MissingQuantile),
        }
    }

    /// Atoms and weights for finite-support models (constant, permutation).
    pub fn finite_support(&self) -> Option<Vec<(f64, Vec<f64>)>> {
        finite_support_of_kind(self.kind()?)
    }

    /// Generator of the sup-norm: the deterministic vector (1, ..., 1).
    pub fn constant(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension(
                "constant generator needs dim >= 1".into(),
            ));
        }
        ModelBuilder::new(dim, format!("constant(d={dim})"))
            .kind(ModelKind::Constant { dim })
            .means(vec![1.0; dim])
            .sampler(move |seed, n| {
                let data = rng::sample_rows(seed, n, dim, |_rng, row| row.fill(1.0));
                EmpiricalSample::new(data, n, dim).expect("constant sampler")
            })
            .cdf(|x: &[f64]| Ok(if x.iter().all(|v| *v >= 1.0) { 1.0 } else { 0.0 }))
            .maxcf_closed_form(|x: &[f64]| {
                Ok(x.iter().copied().fold(1.0f64, f64::max))
            })
            .quantile(|_alpha| Ok(1.0))
            .build()
    }

    /// Generator of the 1-norm: a uniformly random permutation of
    /// (d, 0, ..., 0).
    pub fn permutation(dim: usize) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension(
                "permutation generator needs dim >= 1".into(),
            ));
        }
        let d_f = dim as f64;
        ModelBuilder::new(dim, format!("permutation(d={dim})"))
            .kind(ModelKind::Permutation { dim })
            .means(vec![1.0; dim])
            .sampler(move |seed, n| {
                let data = rng::sample_rows(seed, n, dim, |rng: &mut ChaCha8Rng, row| {
                    row.fill(0.0);
                    let j = rng.random_range(0..dim);
                    row[j] = d_f;
                });
                EmpiricalSample::new(data, n, dim).expect("permutation sampler")
            })
            .cdf(move |x: &[f64]| {
                if x.iter().any(|v| *v < 0.0) {
                    return Ok(0.0);
                }
                let hits = x.iter().filter(|v| **v >= d_f).count();
                Ok(hits as f64 / d_f)
            })
            .maxcf_closed_form(move |x: &[f64]| {
                Ok(x.iter().map(|v| (d_f * v).max(1.0)).sum::<f64>() / d_f)
            })
            .quantile(|_alpha| Ok(1.0))
            .build()
    }

    /// Generator of the lambda-norm: independent Fréchet(lambda) variates
    /// scaled to unit mean by Gamma(1 - 1/lambda).
    pub fn frechet(dim: usize, lambda: f64) -> Result<Self> {
        if dim == 0 {
            return Err(Error::InvalidDimension(
                "frechet generator needs dim >= 1".into(),
            ));
        }
        if !(lambda > 1.0) {
            return Err(Error::InvalidParameter(format!(
                "frechet generator needs lambda > 1 for a finite mean, got {lambda}"
            )));
        }
        let norm = gamma(1.0 - 1.0 / lambda);
        ModelBuilder::new(dim, format!("frechet(lambda={lambda},d={dim})"))
            .kind(ModelKind::Frechet { dim, lambda })
            .means(vec![1.0; dim])
            .sampler(move |seed, n| {
                let data = rng::sample_rows(seed, n, dim, |rng, row| {
                    for v in row.iter_mut() {
                        let u = open_unit(rng);
                        *v = (-u.ln()).powf(-1.0 / lambda) / norm;
                    }
                });
                EmpiricalSample::new(data, n, dim).expect("frechet sampler")
            })
            .cdf(move |z: &[f64]| {
                if z.iter().any(|v| *v <= 0.0) {
                    return Ok(0.0);
                }
                let s: f64 = z.iter().map(|v| (v * norm).powf(-lambda)).sum();
                Ok((-s).exp())
            })
            .survival(move |z: &[f64]| {
                if z.iter().any(|v| *v <= 0.0) {
                    return Ok(1.0);
                }
                let s: f64 = z.iter().map(|v| (v * norm).powf(-lambda)).sum();
                Ok(-(-s).exp_m1())
            })
            .quantile(move |alpha| Ok((-alpha.ln()).powf(-1.0 / lambda) / norm))
            .build()
    }

    /// One-dimensional generalized Pareto model with the closed-form
    /// cdf, quantile, and max-CF.
    pub fn gpd(params: GpdParams) -> Result<Self> {
        let GpdParams { mu, sigma, xi } = params;
        let mean = params.mean();
        ModelBuilder::new(1, format!("gpd(mu={mu},sigma={sigma},xi={xi})"))
            .kind(ModelKind::Gpd { mu, sigma, xi })
            .means(vec![mean])
            .sampler(move |seed, n| {
                let data = rng::sample_rows(seed, n, 1, |rng, row| {
                    let u = open_unit(rng);
                    row[0] = mu + sigma / xi * ((1.0 - u).powf(-xi) - 1.0);
                });
                EmpiricalSample::new(data, n, 1).expect("gpd sampler")
            })
            .cdf(move |z: &[f64]| {
                let z = z[0];
                if z < mu {
                    return Ok(0.0);
                }
                Ok(1.0 - (1.0 + xi * (z - mu) / sigma).powf(-1.0 / xi))
            })
            .survival(move |z: &[f64]| {
                let z = z[0];
                if z < mu {
                    return Ok(1.0);
                }
                Ok((1.0 + xi * (z - mu) / sigma).powf(-1.0 / xi))
            })
            .maxcf_closed_form(move |x: &[f64]| {
                let x = x[0];
                if x == 0.0 {
                    return Ok(1.0);
                }
                if mu > 0.0 && x > 1.0 / mu {
                    Ok(x * mean)
                } else {
                    let t = 1.0 + xi * (1.0 - mu * x) / (sigma * x);
                    Ok(1.0 + sigma * x / (1.0 - xi) * t.powf(1.0 - 1.0 / xi))
                }
            })
            .quantile(move |alpha| Ok(mu + sigma / xi * ((1.0 - alpha).powf(-xi) - 1.0)))
            .build()
    }

    /// Uniform(0, upper) test fixture with a fully analytic max-CF.
    pub fn uniform(upper: f64) -> Result<Self> {
        if !(upper > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "uniform upper bound must be > 0, got {upper}"
            )));
        }
        ModelBuilder::new(1, format!("uniform(0,{upper})"))
            .kind(ModelKind::Uniform { upper })
            .means(vec![upper / 2.0])
            .sampler(move |seed, n| {
                let data = rng::sample_rows(seed, n, 1, |rng, row| {
                    let u: f64 = rng.random();
                    row[0] = u * upper;
                });
                EmpiricalSample::new(data, n, 1).expect("uniform sampler")
            })
            .cdf(move |z: &[f64]| Ok((z[0] / upper).clamp(0.0, 1.0)))
            .survival(move |z: &[f64]| Ok((1.0 - z[0] / upper).clamp(0.0, 1.0)))
            .maxcf_closed_form(move |x: &[f64]| {
                let x = x[0];
                if x <= 1.0 / upper {
                    Ok(1.0)
                } else {
                    Ok(x * upper / 2.0 + 1.0 / (2.0 * x * upper))
                }
            })
            .quantile(move |alpha| Ok(alpha * upper))
            .build()
    }

    /// Multivariate generalized Pareto vector `V = (Z/U)^(1/alpha)` for a
    /// bounded unit-mean generator `Z` with atoms `Z_i <= bound` and an
    /// independent uniform `U`. The cdf is defined only on the region
    /// `x >= bound^(1/alpha) * (1, ..., 1)`.
    pub fn mgpd(alpha: f64, generator: &RandomVectorModel, bound: f64) -> Result<Self> {
        if !(alpha > 1.0) {
            return Err(Error::InvalidParameter(format!(
                "mgpd needs alpha > 1 for finite means, got {alpha}"
            )));
        }
        if !generator.is_unit_mean() {
            return Err(Error::ContractViolation(
                "mgpd generator must have unit means".into(),
            ));
        }
        let support = generator.finite_support().ok_or_else(|| {
            Error::InvalidParameter(
                "mgpd needs a generator with finite, bounded support (constant or permutation)"
                    .into(),
            )
        })?;
        let atom_max = support
            .iter()
            .flat_map(|(_, z)| z.iter().copied())
            .fold(0.0f64, f64::max);
        if !(bound >= atom_max) || !(bound >= 1.0) {
            return Err(Error::InvalidParameter(format!(
                "declared bound {bound} is below the generator's largest atom {atom_max}"
            )));
        }
        let dim = generator.dim();
        let kind = generator
            .kind()
            .cloned()
            .map(|g| ModelKind::Mgpd {
                alpha,
                bound,
                generator: Box::new(g),
            });
        let threshold = bound.powf(1.0 / alpha);
        // E V_i = E Z_i^{1/alpha} * E U^{-1/alpha}, with E U^{-1/alpha} = alpha/(alpha-1)
        let means: Vec<f64> = (0..dim)
            .map(|i| {
                support
                    .iter()
                    .map(|(w, z)| w * z[i].powf(1.0 / alpha))
                    .sum::<f64>()
                    * alpha
                    / (alpha - 1.0)
            })
            .collect();
        let support_sampler = support.clone();
        let support_cdf = support.clone();
        let support_surv = support.clone();
        let label = format!("mgpd(alpha={alpha},bound={bound},{})", generator.label());

        let mut builder = ModelBuilder::new(dim, label)
            .means(means)
            .sampler(move |seed, n| {
                let data = rng::sample_rows(seed, n, dim, |rng, row| {
                    let u = open_unit(rng);
                    let z = pick_atom(&support_sampler, rng);
                    for (v, zi) in row.iter_mut().zip(z) {
                        *v = (zi / u).powf(1.0 / alpha);
                    }
                });
                EmpiricalSample::new(data, n, dim).expect("mgpd sampler")
            })
            .cdf(move |x: &[f64]| {
                check_mgpd_region(x, threshold)?;
                let excess = dnorm_of_inverse_power(&support_cdf, x, alpha);
                Ok(1.0 - excess)
            })
            .survival(move |x: &[f64]| {
                check_mgpd_region(x, threshold)?;
                Ok(dnorm_of_inverse_power(&support_surv, x, alpha))
            });
        if let Some(kind) = kind {
            builder = builder.kind(kind);
        }
        if dim == 1 {
            // single coordinate: F(x) = 1 - z1 / x^alpha on the region, so
            // the quantile is (z1 / (1 - alpha_level))^(1/alpha)
            let z1 = support
                .iter()
                .map(|(w, z)| w * z[0])
                .sum::<f64>();
            builder =
                builder.quantile(move |a| Ok((z1 / (1.0 - a)).powf(1.0 / alpha)));
        }
        builder.build()
    }

    /// Build a catalog model from its declarative specification.
    pub fn from_kind(kind: &ModelKind) -> Result<Self> {
        match kind {
            ModelKind::Constant { dim } => Self::constant(*dim),
            ModelKind::Permutation { dim } => Self::permutation(*dim),
            ModelKind::Frechet { dim, lambda } => Self::frechet(*dim, *lambda),
            ModelKind::Gpd { mu, sigma, xi } => Self::gpd(GpdParams::new(*mu, *sigma, *xi)?),
            ModelKind::Uniform { upper } => Self::uniform(*upper),
            ModelKind::Mgpd {
                alpha,
                bound,
                generator,
            } => {
                let generator = Self::from_kind(generator)?;
                Self::mgpd(*alpha, &generator, *bound)
            }
        }
    }

    pub fn from_spec_json(json: &str) -> Result<Self> {
        let kind: ModelKind = serde_json::from_str(json)?;
        Self::from_kind(&kind)
    }
}

fn check_mgpd_region(x: &[f64], threshold: f64) -> Result<()> {
    if x.iter().any(|v| *v < threshold) {
        return Err(Error::OutOfDomain(format!(
            "mgpd cdf is defined only for x >= {threshold} componentwise"
        )));
    }
    Ok(())
}

/// `E max_i (Z_i / x_i^alpha)` for a finite-support generator: the D-norm
/// of the vector `1/x^alpha`.
fn dnorm_of_inverse_power(support: &[(f64, Vec<f64>)], x: &[f64], alpha: f64) -> f64 {
    support
        .iter()
        .map(|(w, z)| {
            w * z
                .iter()
                .zip(x)
                .map(|(zi, xi)| zi / xi.powf(alpha))
                .fold(0.0f64, f64::max)
        })
        .sum()
}

fn pick_atom<'a>(support: &'a [(f64, Vec<f64>)], rng: &mut ChaCha8Rng) -> &'a [f64] {
    if support.len() == 1 {
        return &support[0].1;
    }
    let u: f64 = rng.random();
    let mut acc = 0.0;
    for (w, z) in support {
        acc += w;
        if u < acc {
            return z;
        }
    }
    &support[support.len() - 1].1
}

pub(crate) fn finite_support_of_kind(kind: &ModelKind) -> Option<Vec<(f64, Vec<f64>)>> {
    match kind {
        ModelKind::Constant { dim } => Some(vec![(1.0, vec![1.0; *dim])]),
        ModelKind::Permutation { dim } => {
            let d = *dim;
            Some(
                (0..d)
                    .map(|j| {
                        let mut z = vec![0.0; d];
                        z[j] = d as f64;
                        (1.0 / d as f64, z)
                    })
                    .collect(),
            )
        }
        _ => None,
    }
}
