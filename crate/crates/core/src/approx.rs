//! Componentwise uniform approximation of Clifford-valued functions on the
//! unit box `[0,1]^d`, `d` in `{1, 2}`.
//!
//! A function `f` is split into its real components `f_I = <f e^I>_0`, each
//! component is replaced by its (tensor product) Bernstein polynomial of
//! degree `m`, and the polynomials are recombined as `sum_I B_m[f_I] e_I`.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::blade::BladeMask;
use crate::error::{CliffordError, Result};
use crate::identities::scalar_part_expression;
use crate::multivector::Multivector;
use crate::scalar::Real;
use crate::signature::Signature;

/// Point evaluation of the function behind a set of samples.
pub type SourceFn<T> = Arc<dyn Fn(&[T]) -> Multivector<T> + Send + Sync>;

/// Uniform grid on `[0,1]^d` with `resolution` nodes per axis, endpoints
/// included. Node `idx` has axis-0 index `idx % resolution`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Grid {
    dim: usize,
    resolution: usize,
}

impl Grid {
    pub fn new(dim: usize, resolution: usize) -> Result<Self> {
        if !(1..=2).contains(&dim) {
            return Err(CliffordError::Dimension(dim));
        }
        if resolution < 2 {
            return Err(CliffordError::Resolution(resolution));
        }
        Ok(Grid { dim, resolution })
    }

    /// 1024 nodes on the interval, 64 x 64 on the square.
    pub fn standard(dim: usize) -> Result<Self> {
        match dim {
            1 => Grid::new(1, 1024),
            2 => Grid::new(2, 64),
            d => Err(CliffordError::Dimension(d)),
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn resolution(&self) -> usize {
        self.resolution
    }

    pub fn len(&self) -> usize {
        self.resolution.pow(self.dim as u32)
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    /// Per-axis node coordinates `i / (resolution - 1)`.
    pub fn axis<T: Real>(&self) -> Vec<T> {
        let last = T::from_usize(self.resolution - 1).unwrap();
        (0..self.resolution)
            .map(|i| T::from_usize(i).unwrap() / last)
            .collect()
    }

    /// Per-axis node indices of a flat node index.
    pub fn node_indices(&self, idx: usize) -> [usize; 2] {
        [idx % self.resolution, idx / self.resolution]
    }

    pub fn points<T: Real>(&self) -> Vec<Vec<T>> {
        let axis = self.axis::<T>();
        (0..self.len())
            .map(|idx| {
                let ij = self.node_indices(idx);
                ij[..self.dim].iter().map(|&i| axis[i]).collect()
            })
            .collect()
    }
}

/// Multilinear interpolation of grid data at `x`.
fn interpolate<T: Real, V: Clone>(
    grid: &Grid,
    x: &[T],
    values: &[V],
    lerp: impl Fn(&V, &V, T) -> V,
) -> V {
    let last = grid.resolution - 1;
    let scale = T::from_usize(last).unwrap();
    let locate = |t: T| {
        let s = (t.max(T::zero()).min(T::one())) * scale;
        let i = s.floor().to_usize().unwrap().min(last - 1);
        (i, s - T::from_usize(i).unwrap())
    };
    let (i0, t0) = locate(x[0]);
    if grid.dim == 1 {
        return lerp(&values[i0], &values[i0 + 1], t0);
    }
    let (i1, t1) = locate(x[1]);
    let r = grid.resolution;
    let lo = lerp(&values[i0 + r * i1], &values[i0 + 1 + r * i1], t0);
    let hi = lerp(&values[i0 + r * (i1 + 1)], &values[i0 + 1 + r * (i1 + 1)], t0);
    lerp(&lo, &hi, t1)
}

/// A Clifford-valued function sampled on a [`Grid`].
///
/// Functions built with [`SampledFunction::from_fn`] keep their source so
/// they can be evaluated off the grid; raw samples are interpolated.
#[derive(Clone)]
pub struct SampledFunction<T> {
    sig: Signature,
    grid: Grid,
    values: Vec<Multivector<T>>,
    source: Option<SourceFn<T>>,
}

impl<T: Real> SampledFunction<T> {
    pub fn from_fn<F>(sig: Signature, grid: Grid, f: F) -> Result<Self>
    where
        F: Fn(&[T]) -> Multivector<T> + Send + Sync + 'static,
    {
        let source: SourceFn<T> = Arc::new(f);
        let values: Vec<_> = grid
            .points::<T>()
            .par_iter()
            .map(|x| source(x))
            .collect();
        if let Some(bad) = values.iter().find(|v| v.sig() != sig) {
            return Err(CliffordError::SignatureMismatch {
                left: sig,
                right: bad.sig(),
            });
        }
        Ok(SampledFunction {
            sig,
            grid,
            values,
            source: Some(source),
        })
    }

    pub fn from_samples(sig: Signature, grid: Grid, values: Vec<Multivector<T>>) -> Result<Self> {
        if values.len() != grid.len() {
            return Err(CliffordError::CoefficientCount {
                expected: grid.len(),
                got: values.len(),
            });
        }
        if let Some(bad) = values.iter().find(|v| v.sig() != sig) {
            return Err(CliffordError::SignatureMismatch {
                left: sig,
                right: bad.sig(),
            });
        }
        Ok(SampledFunction {
            sig,
            grid,
            values,
            source: None,
        })
    }

    pub fn sig(&self) -> Signature {
        self.sig
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn values(&self) -> &[Multivector<T>] {
        &self.values
    }

    pub fn has_source(&self) -> bool {
        self.source.is_some()
    }

    pub fn eval(&self, x: &[T]) -> Multivector<T> {
        match &self.source {
            Some(f) => f(x),
            None => interpolate(&self.grid, x, &self.values, |a, b, t| {
                Multivector::from_fn(self.sig, |m| {
                    let (u, v) = (a.get(m), b.get(m));
                    u + t * (v - u)
                })
            }),
        }
    }

    /// Same grid, values transformed pointwise.
    pub fn map<F>(&self, f: F) -> Self
    where
        F: Fn(&Multivector<T>) -> Multivector<T> + Send + Sync + 'static,
    {
        let f = Arc::new(f);
        let values = self.values.par_iter().map(|v| f(v)).collect();
        let source = self.source.clone().map(|src| {
            let f = Arc::clone(&f);
            Arc::new(move |x: &[T]| f(&src(x))) as SourceFn<T>
        });
        SampledFunction {
            sig: self.sig,
            grid: self.grid,
            values,
            source,
        }
    }
}

impl<T> fmt::Debug for SampledFunction<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("SampledFunction")
            .field("sig", &self.sig)
            .field("grid", &self.grid)
            .field("samples", &self.values.len())
            .field("has_source", &self.source.is_some())
            .finish()
    }
}

/// Real component `f_I` of a sampled function.
#[derive(Clone)]
pub struct ComponentField<T> {
    mask: BladeMask,
    grid: Grid,
    values: Vec<T>,
    source: Option<SourceFn<T>>,
}

impl<T: Real> ComponentField<T> {
    /// A scalar field not derived from a multivector function.
    pub fn from_fn<F>(grid: Grid, f: F) -> Self
    where
        F: Fn(&[T]) -> T + Send + Sync + 'static,
    {
        let sig = Signature::new(1, 0).unwrap();
        let lifted: SourceFn<T> = Arc::new(move |x: &[T]| Multivector::scalar(sig, f(x)));
        let values = grid.points::<T>().iter().map(|x| lifted(x).scalar_part()).collect();
        ComponentField {
            mask: BladeMask::SCALAR,
            grid,
            values,
            source: Some(lifted),
        }
    }

    pub fn mask(&self) -> BladeMask {
        self.mask
    }

    pub fn grid(&self) -> Grid {
        self.grid
    }

    pub fn values(&self) -> &[T] {
        &self.values
    }

    pub fn eval(&self, x: &[T]) -> T {
        match &self.source {
            Some(f) => f(x).coeff(self.mask),
            None => interpolate(&self.grid, x, &self.values, |&a, &b, t| a + t * (b - a)),
        }
    }

    /// Smallest and largest sampled value.
    pub fn range(&self) -> (T, T) {
        self.values.iter().fold(
            (T::infinity(), T::neg_infinity()),
            |(lo, hi), &v| (lo.min(v), hi.max(v)),
        )
    }
}

impl<T> fmt::Debug for ComponentField<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("ComponentField")
            .field("mask", &self.mask)
            .field("grid", &self.grid)
            .finish()
    }
}

/// One [`ComponentField`] per blade, in mask order.
pub fn extract_components<T: Real>(f: &SampledFunction<T>) -> Vec<ComponentField<T>> {
    BladeMask::all(f.sig)
        .map(|mask| ComponentField {
            mask,
            grid: f.grid,
            values: f.values.iter().map(|v| v.coeff(mask)).collect(),
            source: f.source.clone(),
        })
        .collect()
}

/// `sum_I values_I(x) e_I` at every grid node.
pub fn recombine<T: Real>(sig: Signature, components: &[ComponentField<T>]) -> Vec<Multivector<T>> {
    let len = components.first().map_or(0, |c| c.values.len());
    (0..len)
        .map(|node| {
            let mut mv = Multivector::zero(sig);
            for c in components {
                mv.set(c.mask, mv.get(c.mask) + c.values[node]);
            }
            mv
        })
        .collect()
}

/// Pointwise scalar part computed only with blade sandwiches (and the
/// principal involution in odd dimension). The result is scalar valued.
pub fn algebraic_scalar_projection<T: Real>(f: &SampledFunction<T>) -> SampledFunction<T> {
    f.map(|v| {
        let (expr, shift) = scalar_part_expression(v);
        expr.scale(T::one() / T::from_u64(1 << shift).unwrap())
    })
}

fn bernstein_basis<T: Real>(degree: usize, x: T) -> Vec<T> {
    let mut basis = Vec::with_capacity(degree + 1);
    basis.push(T::one());
    let y = T::one() - x;
    for j in 1..=degree {
        basis.push(x * basis[j - 1]);
        for k in (1..j).rev() {
            basis[k] = y * basis[k] + x * basis[k - 1];
        }
        basis[0] = y * basis[0];
    }
    basis
}

/// Degree-`m` (tensor product) Bernstein polynomial of a component.
///
/// Stored as the multilinear interpolant of the corner values plus the
/// Bernstein polynomial of the remainder. Bernstein operators reproduce
/// multilinear data, so the sum is the usual `sum_k c(k/m) b_{m,k}`; the
/// split makes constants and affine data come out exact in floating point.
#[derive(Debug, Clone, PartialEq)]
pub struct BernsteinFit<T> {
    dim: usize,
    degree: usize,
    /// Coefficients of `prod_{i in S} x_i` for subsets `S` of the axes.
    multilinear: Vec<T>,
    /// Remainder at the nodes `k/m`, axis 0 fastest.
    residual: Vec<T>,
}

impl<T: Real> BernsteinFit<T> {
    pub fn from_fn(dim: usize, degree: usize, f: impl Fn(&[T]) -> T) -> Result<Self> {
        if degree == 0 {
            return Err(CliffordError::ZeroDegree);
        }
        if !(1..=2).contains(&dim) {
            return Err(CliffordError::Dimension(dim));
        }
        let m = T::from_usize(degree).unwrap();
        let nodes: Vec<T> = (0..=degree).map(|k| T::from_usize(k).unwrap() / m).collect();
        let side = degree + 1;
        let count = side.pow(dim as u32);
        let point = |idx: usize| -> Vec<T> {
            (0..dim).map(|a| nodes[(idx / side.pow(a as u32)) % side]).collect()
        };
        let samples: Vec<T> = (0..count).map(|idx| f(&point(idx))).collect();

        // Corner c at bit pattern b (bit a set = axis a at 1), then the
        // Moebius transform to monomial coefficients.
        let corners: Vec<T> = (0..1usize << dim)
            .map(|b| {
                let idx = (0..dim)
                    .map(|a| if b >> a & 1 == 1 { degree * side.pow(a as u32) } else { 0 })
                    .sum::<usize>();
                samples[idx]
            })
            .collect();
        let multilinear: Vec<T> = (0..1usize << dim)
            .map(|s| {
                (0..1usize << dim)
                    .filter(|t| t & !s == 0)
                    .fold(T::zero(), |acc, t| {
                        if (s.count_ones() - t.count_ones()) % 2 == 0 {
                            acc + corners[t]
                        } else {
                            acc - corners[t]
                        }
                    })
            })
            .collect();
        let mut fit = BernsteinFit {
            dim,
            degree,
            multilinear,
            residual: Vec::new(),
        };
        fit.residual = (0..count)
            .map(|idx| samples[idx] - fit.multilinear_at(&point(idx)))
            .collect();
        Ok(fit)
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    fn multilinear_at(&self, x: &[T]) -> T {
        let mut acc = self.multilinear[0];
        for s in 1..self.multilinear.len() {
            let mono = (0..self.dim)
                .filter(|a| s >> a & 1 == 1)
                .fold(T::one(), |p, a| p * x[a]);
            acc += self.multilinear[s] * mono;
        }
        acc
    }

    /// Bernstein coefficients `c(k/m)`, axis 0 fastest.
    pub fn coefficients(&self) -> Vec<T> {
        let side = self.degree + 1;
        let m = T::from_usize(self.degree).unwrap();
        (0..self.residual.len())
            .map(|idx| {
                let x: Vec<T> = (0..self.dim)
                    .map(|a| T::from_usize((idx / side.pow(a as u32)) % side).unwrap() / m)
                    .collect();
                self.multilinear_at(&x) + self.residual[idx]
            })
            .collect()
    }

    fn eval_with_basis(&self, x: &[T], basis: [&[T]; 2]) -> T {
        let side = self.degree + 1;
        let remainder = if self.dim == 1 {
            basis[0]
                .iter()
                .zip(&self.residual)
                .fold(T::zero(), |acc, (&b, &r)| acc + b * r)
        } else {
            (0..side).fold(T::zero(), |outer, k1| {
                let row = &self.residual[k1 * side..(k1 + 1) * side];
                let inner = basis[0]
                    .iter()
                    .zip(row)
                    .fold(T::zero(), |acc, (&b, &r)| acc + b * r);
                outer + basis[1][k1] * inner
            })
        };
        self.multilinear_at(x) + remainder
    }

    pub fn eval(&self, x: &[T]) -> T {
        assert_eq!(x.len(), self.dim);
        let b0 = bernstein_basis(self.degree, x[0]);
        let b1 = if self.dim == 2 {
            bernstein_basis(self.degree, x[1])
        } else {
            Vec::new()
        };
        self.eval_with_basis(x, [&b0, &b1])
    }

    /// Values at every node of `grid`, identical to calling [`Self::eval`].
    pub fn eval_grid(&self, grid: &Grid) -> Vec<T> {
        assert_eq!(grid.dim(), self.dim);
        let axis = grid.axis::<T>();
        let table: Vec<Vec<T>> = axis.iter().map(|&x| bernstein_basis(self.degree, x)).collect();
        (0..grid.len())
            .into_par_iter()
            .map(|idx| {
                let [i0, i1] = grid.node_indices(idx);
                if self.dim == 1 {
                    self.eval_with_basis(&[axis[i0]], [&table[i0], &[]])
                } else {
                    self.eval_with_basis(&[axis[i0], axis[i1]], [&table[i0], &table[i1]])
                }
            })
            .collect()
    }
}

/// Bernstein fit of degree `m` for one component.
pub fn bernstein_fit<T: Real>(c: &ComponentField<T>, m: usize) -> Result<BernsteinFit<T>> {
    BernsteinFit::from_fn(c.grid.dim(), m, |x| c.eval(x))
}

/// Sup-norm errors of the degree-`m` approximant on the sample grid.
#[derive(Debug, Clone, PartialEq)]
pub struct ApproxResult<T> {
    pub degree: usize,
    /// `(I, sup_x |f_I(x) - B_m[f_I](x)|)` in mask order.
    pub component_errors: Vec<(BladeMask, T)>,
    /// `sup_x max_I |(f - approximant)(x)_I|`.
    pub combined_error: T,
}

/// Componentwise Bernstein approximation of `f`.
pub fn approximate<T: Real>(f: &SampledFunction<T>, m: usize) -> Result<ApproxResult<T>> {
    if m == 0 {
        return Err(CliffordError::ZeroDegree);
    }
    let components = extract_components(f);
    let fitted: Vec<(BladeMask, Vec<T>)> = components
        .par_iter()
        .map(|c| bernstein_fit(c, m).map(|fit| (c.mask, fit.eval_grid(&f.grid))))
        .collect::<Result<_>>()?;

    let component_errors = components
        .iter()
        .zip(&fitted)
        .map(|(c, (mask, approx))| {
            let err = c
                .values
                .iter()
                .zip(approx)
                .fold(T::zero(), |e, (&v, &a)| e.max((v - a).abs()));
            (*mask, err)
        })
        .collect();

    let mut combined = T::zero();
    for (node, value) in f.values.iter().enumerate() {
        let mut approximant = Multivector::zero(f.sig);
        for (mask, approx) in &fitted {
            approximant.set(*mask, approx[node]);
        }
        let diff = value.try_sub(&approximant)?;
        combined = diff.coeffs().iter().fold(combined, |e, &d| e.max(d.abs()));
    }
    Ok(ApproxResult {
        degree: m,
        component_errors,
        combined_error: combined,
    })
}

/// Built-in target functions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Target {
    /// `1.5 - 0.25 e_1 + 0.75 e_{1..n}`.
    Constant,
    /// `x e_1`.
    Coordinate,
    /// `exp(x e_12) = cos x + sin x e_12`.
    CliffordExp,
    /// Rotor field `cos(t/2) + sin(t/2) e_12` with `t = pi (x + y) / 2` on the square.
    RotorField,
}

impl Target {
    pub const ALL: [Target; 4] = [
        Target::Constant,
        Target::Coordinate,
        Target::CliffordExp,
        Target::RotorField,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Target::Constant => "constant",
            Target::Coordinate => "coordinate",
            Target::CliffordExp => "clifford-exp",
            Target::RotorField => "rotor-field",
        }
    }

    pub fn dim(self) -> usize {
        match self {
            Target::RotorField => 2,
            _ => 1,
        }
    }

    pub fn default_signature(self) -> Signature {
        match self {
            Target::RotorField => Signature::new(2, 0).unwrap(),
            _ => Signature::new(0, 2).unwrap(),
        }
    }

    pub fn sample<T: Real>(self, sig: Signature) -> Result<SampledFunction<T>> {
        self.sample_on(sig, Grid::standard(self.dim())?)
    }

    pub fn sample_on<T: Real>(self, sig: Signature, grid: Grid) -> Result<SampledFunction<T>> {
        if grid.dim() != self.dim() {
            return Err(CliffordError::Dimension(grid.dim()));
        }
        let e12 = BladeMask::new(0b11);
        if matches!(self, Target::CliffordExp | Target::RotorField) && sig.n() < 2 {
            return Err(CliffordError::ParameterOutOfRange(format!(
                "target {} needs n >= 2, got signature {sig}",
                self.name()
            )));
        }
        let c = |v: f64| T::from_f64(v).unwrap();
        match self {
            Target::Constant => {
                let mut value = Multivector::scalar(sig, c(1.5));
                value.set(BladeMask::new(1), value.get(BladeMask::new(1)) - c(0.25));
                let top = BladeMask::pseudoscalar(sig);
                value.set(top, value.get(top) + c(0.75));
                SampledFunction::from_fn(sig, grid, move |_| value.clone())
            }
            Target::Coordinate => SampledFunction::from_fn(sig, grid, move |x: &[T]| {
                Multivector::blade(sig, BladeMask::new(1), x[0])
            }),
            Target::CliffordExp => SampledFunction::from_fn(sig, grid, move |x: &[T]| {
                let mut v = Multivector::scalar(sig, x[0].cos());
                v.set(e12, x[0].sin());
                v
            }),
            Target::RotorField => SampledFunction::from_fn(sig, grid, move |x: &[T]| {
                let half = T::PI() * (x[0] + x[1]) / c(4.0);
                let mut v = Multivector::scalar(sig, half.cos());
                v.set(e12, half.sin());
                v
            }),
        }
    }
}

impl fmt::Display for Target {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Target {
    type Err = CliffordError;

    fn from_str(s: &str) -> Result<Self> {
        Target::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| CliffordError::UnknownTarget(s.to_string()))
    }
}

/// One CSV row: a component error, or the combined error when
/// `component_mask` is `"combined"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ApproxRow {
    pub target: String,
    pub signature: String,
    pub degree: usize,
    pub component_mask: String,
    pub sup_error: f64,
}

impl<T: Real> ApproxResult<T> {
    pub fn rows(&self, target: &str, sig: Signature) -> Vec<ApproxRow> {
        let row = |component_mask: String, err: T| ApproxRow {
            target: target.to_string(),
            signature: sig.to_string(),
            degree: self.degree,
            component_mask,
            sup_error: err.to_f64().unwrap(),
        };
        self.component_errors
            .iter()
            .map(|&(mask, err)| row(mask.bits().to_string(), err))
            .chain(std::iter::once(row("combined".into(), self.combined_error)))
            .collect()
    }
}

/// Approximation errors for every degree, in the order given.
pub fn degree_sweep<T: Real>(f: &SampledFunction<T>, degrees: &[usize]) -> Result<Vec<ApproxResult<T>>> {
    if degrees.is_empty() {
        return Err(CliffordError::ParameterOutOfRange("empty degree list".into()));
    }
    degrees.iter().map(|&m| approximate(f, m)).collect()
}
