//! Root systems of the simple complex Lie algebras, in exact arithmetic.
//!
//! Weights are integer coordinate vectors in the fundamental-weight basis
//! ω₁..ω_ℓ, with node numbering fixed to the Bourbaki planches for every
//! series. The invariant bilinear form is normalized so that the highest
//! root θ satisfies ⟨θ,θ⟩ = 2, and is stored as an exact rational Gram
//! matrix on the fundamental weights. Positive roots are generated by
//! closure from the simple roots and carry, besides their ω-coordinates,
//! their integer coefficients on the simple roots and on the simple
//! coroots; the latter make most pairings pure integer arithmetic.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};
use num_traits::{One, Zero};
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};

/// The seven series of simple Lie algebras.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Series {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl Series {
    pub const ALL: [Series; 7] = [
        Series::A,
        Series::B,
        Series::C,
        Series::D,
        Series::E,
        Series::F,
        Series::G,
    ];

    pub fn letter(self) -> char {
        match self {
            Series::A => 'A',
            Series::B => 'B',
            Series::C => 'C',
            Series::D => 'D',
            Series::E => 'E',
            Series::F => 'F',
            Series::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Series> {
        match c.to_ascii_uppercase() {
            'A' => Some(Series::A),
            'B' => Some(Series::B),
            'C' => Some(Series::C),
            'D' => Some(Series::D),
            'E' => Some(Series::E),
            'F' => Some(Series::F),
            'G' => Some(Series::G),
            _ => None,
        }
    }

    /// Human-readable rank constraint for the series.
    pub fn allowed_ranks(self) -> &'static str {
        match self {
            Series::A => "rank >= 1",
            Series::B => "rank >= 3",
            Series::C => "rank >= 2",
            Series::D => "rank >= 4",
            Series::E => "rank in {6, 7, 8}",
            Series::F => "rank = 4",
            Series::G => "rank = 2",
        }
    }

    fn admits(self, rank: usize) -> bool {
        match self {
            Series::A => rank >= 1,
            Series::B => rank >= 3,
            Series::C => rank >= 2,
            Series::D => rank >= 4,
            Series::E => (6..=8).contains(&rank),
            Series::F => rank == 4,
            Series::G => rank == 2,
        }
    }
}

impl fmt::Display for Series {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.letter())
    }
}

/// A validated simple type: a series letter plus a rank.
///
/// Construction enforces the rank ranges of the classification (B needs
/// rank ≥ 3, D rank ≥ 4, E rank 6..8, and so on), so every `LieType`
/// value names an actual simple Lie algebra.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct LieType {
    series: Series,
    rank: usize,
}

impl LieType {
    pub fn new(series: Series, rank: usize) -> Result<LieType> {
        if series.admits(rank) {
            Ok(LieType { series, rank })
        } else {
            Err(Error::InvalidRank {
                series,
                rank,
                allowed: series.allowed_ranks(),
            })
        }
    }

    pub fn series(self) -> Series {
        self.series
    }

    pub fn rank(self) -> usize {
        self.rank
    }
}

impl fmt::Display for LieType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.series, self.rank)
    }
}

impl FromStr for LieType {
    type Err = Error;

    fn from_str(s: &str) -> Result<LieType> {
        let err = || Error::ParseLieType {
            input: s.to_string(),
        };
        let mut chars = s.trim().chars();
        let series = chars.next().and_then(Series::from_letter).ok_or_else(err)?;
        let rank: usize = chars.as_str().parse().map_err(|_| err())?;
        LieType::new(series, rank)
    }
}

impl Serialize for LieType {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for LieType {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(deserializer)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// A weight, stored as integer coordinates on the fundamental weights.
///
/// Coordinate `i` is the pairing ⟨λ, αᵢ∨⟩ with the i-th simple coroot, so
/// a weight is dominant exactly when all coordinates are ≥ 0.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Weight(Vec<i64>);

impl Weight {
    pub fn new(coords: Vec<i64>) -> Weight {
        Weight(coords)
    }

    pub fn zero(rank: usize) -> Weight {
        Weight(vec![0; rank])
    }

    /// The i-th fundamental weight ωᵢ (1-based, Bourbaki numbering).
    pub fn fundamental(rank: usize, i: usize) -> Weight {
        assert!(
            (1..=rank).contains(&i),
            "fundamental weight index {i} out of range 1..={rank}"
        );
        let mut coords = vec![0; rank];
        coords[i - 1] = 1;
        Weight(coords)
    }

    pub fn coords(&self) -> &[i64] {
        &self.0
    }

    pub fn rank(&self) -> usize {
        self.0.len()
    }

    pub fn is_dominant(&self) -> bool {
        self.0.iter().all(|&c| c >= 0)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// Componentwise `self + k * other`.
    pub fn axpy(&self, k: i64, other: &Weight) -> Weight {
        assert_eq!(self.rank(), other.rank());
        Weight(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a + k * b)
                .collect(),
        )
    }

    pub fn negated(&self) -> Weight {
        Weight(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for Weight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (k, c) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, "]")
    }
}

impl std::ops::Add for &Weight {
    type Output = Weight;
    fn add(self, rhs: &Weight) -> Weight {
        self.axpy(1, rhs)
    }
}

impl std::ops::Sub for &Weight {
    type Output = Weight;
    fn sub(self, rhs: &Weight) -> Weight {
        self.axpy(-1, rhs)
    }
}

/// A positive root, carried in three coordinate systems at once.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    weight: Weight,
    simple_coords: Vec<i64>,
    coroot_coords: Vec<i64>,
    height: i64,
}

impl Root {
    /// ω-coordinates of the root.
    pub fn weight(&self) -> &Weight {
        &self.weight
    }

    /// Integer coefficients on the simple roots α₁..α_ℓ.
    pub fn simple_coords(&self) -> &[i64] {
        &self.simple_coords
    }

    /// Integer coefficients of the coroot β∨ = 2β/⟨β,β⟩ on the simple
    /// coroots α₁∨..α_ℓ∨.
    pub fn coroot_coords(&self) -> &[i64] {
        &self.coroot_coords
    }

    /// Sum of the simple-root coefficients.
    pub fn height(&self) -> i64 {
        self.height
    }
}

/// Integer pairing ⟨w, β∨⟩ of a weight with a coroot given by its
/// coefficients on the simple coroots.
pub(crate) fn coroot_pairing(w: &Weight, coroot_coords: &[i64]) -> i64 {
    w.coords()
        .iter()
        .zip(coroot_coords)
        .map(|(a, b)| a * b)
        .sum()
}

/// Exact root-system data for one simple type.
///
/// Immutable after construction; all operations are pure functions of
/// their inputs, so a `RootSystem` can be shared freely across threads.
pub struct RootSystem {
    lie_type: LieType,
    cartan: Vec<Vec<i64>>,
    simple_roots: Vec<Weight>,
    positive_roots: Vec<Root>,
    highest_root: Weight,
    rho: Weight,
    form: Vec<Vec<BigRational>>,
    comarks: Vec<i64>,
    two_rho_coroot: Vec<i64>,
    scaled_symmetrizer: Vec<i64>,
}

impl RootSystem {
    /// Builds the full root system for a validated type.
    ///
    /// Positive roots are generated by closure from the simple roots,
    /// ordered by height then by simple-root coordinates; the invariant
    /// form is the symmetrized Cartan matrix rescaled so ⟨θ,θ⟩ = 2.
    pub fn new(lie_type: LieType) -> RootSystem {
        let l = lie_type.rank();
        let cartan = cartan_matrix(lie_type);

        // Symmetrizer d_i with <a_i, a_j> = d_j C[i][j]; fixed up to scale
        // by d_j C[i][j] = d_i C[j][i], then pinned by <theta,theta> = 2.
        let mut sym: Vec<Option<Rational64>> = vec![None; l];
        sym[0] = Some(Rational64::one());
        while sym.iter().any(Option::is_none) {
            for i in 0..l {
                let Some(di) = sym[i] else { continue };
                for j in 0..l {
                    if cartan[i][j] != 0 && sym[j].is_none() {
                        sym[j] = Some(di * Rational64::new(cartan[j][i], cartan[i][j]));
                    }
                }
            }
        }
        let mut sym: Vec<Rational64> = sym.into_iter().map(Option::unwrap).collect();

        let simple_alpha: Vec<Vec<i64>> = (0..l)
            .map(|i| (0..l).map(|k| if k == i { 1 } else { 0 }).collect())
            .collect();
        let positive_alpha = close_positive_roots(&cartan, &simple_alpha);

        let max_height = positive_alpha
            .iter()
            .map(|x| x.iter().sum::<i64>())
            .max()
            .expect("nonempty root set");
        let highest: Vec<&Vec<i64>> = positive_alpha
            .iter()
            .filter(|x| x.iter().sum::<i64>() == max_height)
            .collect();
        assert_eq!(highest.len(), 1, "highest root must be unique");
        let theta_alpha = highest[0].clone();

        // Rescale the symmetrizer so the highest root has squared length 2.
        let theta_norm = alpha_norm(&cartan, &sym, &theta_alpha);
        let scale = Rational64::new(2, 1) / theta_norm;
        for d in &mut sym {
            *d *= scale;
        }
        debug_assert_eq!(alpha_norm(&cartan, &sym, &theta_alpha), Rational64::new(2, 1));

        // Smallest integer s with s*d_i integral for all i.
        let form_scale = sym
            .iter()
            .map(|d| *d.denom())
            .fold(1i64, num_integer::lcm);
        let scaled_symmetrizer: Vec<i64> = sym
            .iter()
            .map(|d| {
                let v = d * Rational64::from_integer(form_scale);
                assert!(v.is_integer());
                v.to_integer()
            })
            .collect();

        let positive_roots: Vec<Root> = positive_alpha
            .iter()
            .map(|x| {
                let weight = alpha_to_omega(&cartan, x);
                let norm = alpha_norm(&cartan, &sym, x);
                let half_norm = norm / Rational64::new(2, 1);
                let coroot_coords: Vec<i64> = x
                    .iter()
                    .zip(&sym)
                    .map(|(&xk, dk)| {
                        let y = Rational64::from_integer(xk) * dk / half_norm;
                        assert!(y.is_integer(), "coroot coefficients must be integers");
                        y.to_integer()
                    })
                    .collect();
                Root {
                    weight,
                    simple_coords: x.clone(),
                    coroot_coords,
                    height: x.iter().sum(),
                }
            })
            .collect();

        let theta_idx = positive_roots.len() - 1;
        let highest_root = positive_roots[theta_idx].weight.clone();
        let comarks = positive_roots[theta_idx].coroot_coords.clone();

        let mut two_rho_coroot = vec![0i64; l];
        for r in &positive_roots {
            for (acc, y) in two_rho_coroot.iter_mut().zip(&r.coroot_coords) {
                *acc += y;
            }
        }

        let form = gram_matrix(&cartan, &sym);

        let rs = RootSystem {
            lie_type,
            simple_roots: simple_alpha
                .iter()
                .map(|x| alpha_to_omega(&cartan, x))
                .collect(),
            cartan,
            positive_roots,
            highest_root,
            rho: Weight(vec![1; l]),
            form,
            comarks,
            two_rho_coroot,
            scaled_symmetrizer,
        };

        // <theta,theta> = 2 exactly, in the final rational form.
        let tt = rs
            .inner_product(&rs.highest_root.clone(), &rs.highest_root.clone())
            .expect("theta has the right rank");
        assert_eq!(tt, BigRational::from_integer(BigInt::from(2)));
        rs
    }

    pub fn lie_type(&self) -> LieType {
        self.lie_type
    }

    pub fn rank(&self) -> usize {
        self.lie_type.rank()
    }

    /// dim 𝔤 = 2·|Φ⁺| + ℓ.
    pub fn dimension(&self) -> u64 {
        2 * self.positive_roots.len() as u64 + self.rank() as u64
    }

    /// Cartan matrix, C[i][j] = ⟨αᵢ, αⱼ∨⟩.
    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_roots(&self) -> &[Weight] {
        &self.simple_roots
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive_roots
    }

    /// The highest root θ, as a dominant weight. This is also the highest
    /// weight of the adjoint representation.
    pub fn highest_root(&self) -> &Weight {
        &self.highest_root
    }

    /// Highest weight of the adjoint representation (= θ).
    pub fn adjoint_weight(&self) -> Weight {
        self.highest_root.clone()
    }

    /// ρ, the half-sum of positive roots: all ω-coordinates equal 1.
    pub fn rho(&self) -> &Weight {
        &self.rho
    }

    /// Gram matrix ⟨ωᵢ,ωⱼ⟩ of the fundamental weights under the
    /// normalized invariant form.
    pub fn form(&self) -> &[Vec<BigRational>] {
        &self.form
    }

    /// The normalized invariant form ⟨a,b⟩, exact and symmetric.
    pub fn inner_product(&self, a: &Weight, b: &Weight) -> Result<BigRational> {
        self.check_rank(a)?;
        self.check_rank(b)?;
        let mut acc = BigRational::zero();
        for (i, &ai) in a.coords().iter().enumerate() {
            if ai == 0 {
                continue;
            }
            for (j, &bj) in b.coords().iter().enumerate() {
                if bj == 0 {
                    continue;
                }
                acc += &self.form[i][j] * BigRational::from_integer(BigInt::from(ai * bj));
            }
        }
        Ok(acc)
    }

    /// Coefficients (m₁,…,m_ℓ) of θ∨ on the simple coroots (the comarks):
    /// θ∨ = Σ mᵢ αᵢ∨.
    pub fn coroot_decomposition(&self) -> &[i64] {
        &self.comarks
    }

    /// d(𝔤) = lcm(m₁,…,m_ℓ) over the coroot decomposition of θ∨. Divides
    /// the Dynkin index of every finite-dimensional representation, and
    /// is attained by one of the fundamental representations.
    pub fn d_of_g(&self) -> u64 {
        self.comarks
            .iter()
            .fold(1u64, |acc, &m| num_integer::lcm(acc, m as u64))
    }

    /// Dual Coxeter number, computed as ⟨ρ, θ∨⟩ + 1.
    pub fn dual_coxeter_number(&self) -> u64 {
        coroot_pairing(&self.rho, &self.comarks) as u64 + 1
    }

    /// Pairing ⟨w, θ∨⟩ with the coroot of the highest root.
    pub fn theta_coroot_pairing(&self, w: &Weight) -> Result<i64> {
        self.check_rank(w)?;
        Ok(coroot_pairing(w, &self.comarks))
    }

    /// Sum of all positive coroots, as coefficients on the simple coroots.
    pub(crate) fn two_rho_coroot(&self) -> &[i64] {
        &self.two_rho_coroot
    }

    /// Integer symmetrizer: `scaled_symmetrizer[i] = s · d_i` where
    /// ⟨αᵢ,αᵢ⟩ = 2 d_i and s is the least common denominator of the d_i.
    pub(crate) fn scaled_symmetrizer(&self) -> &[i64] {
        &self.scaled_symmetrizer
    }

    pub(crate) fn check_rank(&self, w: &Weight) -> Result<()> {
        if w.rank() == self.rank() {
            Ok(())
        } else {
            Err(Error::RankMismatch {
                expected: self.rank(),
                got: w.rank(),
            })
        }
    }

    pub(crate) fn check_dominant(&self, w: &Weight) -> Result<()> {
        self.check_rank(w)?;
        if w.is_dominant() {
            Ok(())
        } else {
            Err(Error::NotDominant {
                weight: w.to_string(),
            })
        }
    }

    /// Simple reflection sᵢ (0-based node index).
    pub fn simple_reflection(&self, w: &Weight, i: usize) -> Weight {
        let c = w.coords()[i];
        w.axpy(-c, &self.simple_roots[i])
    }

    /// The dominant Weyl-chamber representative of `w`, by repeatedly
    /// reflecting at the lowest-index negative coordinate.
    pub fn to_dominant(&self, w: &Weight) -> Weight {
        let mut cur = w.clone();
        loop {
            match cur.coords().iter().position(|&c| c < 0) {
                Some(i) => cur = self.simple_reflection(&cur, i),
                None => return cur,
            }
        }
    }

    /// −w₀λ: the highest weight of the dual representation.
    pub fn dual_weight(&self, lam: &Weight) -> Result<Weight> {
        self.check_dominant(lam)?;
        Ok(self.to_dominant(&lam.negated()))
    }
}

impl fmt::Debug for RootSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("RootSystem")
            .field("lie_type", &self.lie_type)
            .field("positive_roots", &self.positive_roots.len())
            .finish()
    }
}

/// Builds the root system for a validated type. Alias for
/// [`RootSystem::new`], matching the operation vocabulary used
/// throughout the crate documentation.
pub fn build_root_system(t: LieType) -> RootSystem {
    RootSystem::new(t)
}

/// Bourbaki Cartan matrix for the given type, C[i][j] = ⟨αᵢ, αⱼ∨⟩.
fn cartan_matrix(t: LieType) -> Vec<Vec<i64>> {
    let l = t.rank();
    let mut c = vec![vec![0i64; l]; l];
    for (i, row) in c.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut bond = |i: usize, j: usize, a: i64, b: i64| {
        c[i][j] = a;
        c[j][i] = b;
    };
    match t.series() {
        Series::A => {
            for i in 0..l - 1 {
                bond(i, i + 1, -1, -1);
            }
        }
        Series::B => {
            // α_ℓ is the short root.
            for i in 0..l - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(l - 2, l - 1, -2, -1);
        }
        Series::C => {
            // α_ℓ is the long root.
            for i in 0..l - 2 {
                bond(i, i + 1, -1, -1);
            }
            bond(l - 2, l - 1, -1, -2);
        }
        Series::D => {
            for i in 0..l - 3 {
                bond(i, i + 1, -1, -1);
            }
            bond(l - 3, l - 2, -1, -1);
            bond(l - 3, l - 1, -1, -1);
        }
        Series::E => {
            // Node 2 hangs off node 4; 1-3-4-5-...-ℓ is the long chain.
            bond(0, 2, -1, -1);
            bond(1, 3, -1, -1);
            bond(2, 3, -1, -1);
            for i in 3..l - 1 {
                bond(i, i + 1, -1, -1);
            }
        }
        Series::F => {
            // α₁,α₂ long; α₃,α₄ short.
            bond(0, 1, -1, -1);
            bond(1, 2, -2, -1);
            bond(2, 3, -1, -1);
        }
        Series::G => {
            // α₁ short, α₂ long.
            bond(0, 1, -1, -3);
        }
    }
    c
}

/// ⟨x,x⟩ for x in simple-root coordinates, with ⟨αᵢ,αⱼ⟩ = dⱼ C[i][j].
fn alpha_norm(cartan: &[Vec<i64>], sym: &[Rational64], x: &[i64]) -> Rational64 {
    let l = x.len();
    let mut acc = Rational64::zero();
    for i in 0..l {
        if x[i] == 0 {
            continue;
        }
        for j in 0..l {
            if x[j] == 0 {
                continue;
            }
            acc += sym[j] * Rational64::from_integer(x[i] * x[j] * cartan[i][j]);
        }
    }
    acc
}

/// ω-coordinates of a vector given in simple-root coordinates:
/// coordinate k is Σ_j x_j C[j][k].
fn alpha_to_omega(cartan: &[Vec<i64>], x: &[i64]) -> Weight {
    let l = x.len();
    Weight::new(
        (0..l)
            .map(|k| (0..l).map(|j| x[j] * cartan[j][k]).sum())
            .collect(),
    )
}

/// Positive roots by height-graded closure: β + αᵢ is a root iff
/// p − ⟨β, αᵢ∨⟩ > 0 where p is the length of the downward αᵢ-string
/// through β. Returns simple-root coordinate vectors sorted by height
/// then lexicographically.
fn close_positive_roots(cartan: &[Vec<i64>], simple_alpha: &[Vec<i64>]) -> Vec<Vec<i64>> {
    let l = simple_alpha.len();
    let mut known: HashMap<Vec<i64>, ()> = HashMap::new();
    for x in simple_alpha {
        known.insert(x.clone(), ());
    }
    let mut frontier: Vec<Vec<i64>> = simple_alpha.to_vec();
    while !frontier.is_empty() {
        let mut next: Vec<Vec<i64>> = Vec::new();
        for x in &frontier {
            for i in 0..l {
                // Downward string length p.
                let mut p = 0i64;
                let mut y = x.clone();
                loop {
                    y[i] -= 1;
                    if known.contains_key(&y) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..l).map(|j| x[j] * cartan[j][i]).sum();
                if p - pairing > 0 {
                    let mut z = x.clone();
                    z[i] += 1;
                    if !known.contains_key(&z) {
                        known.insert(z.clone(), ());
                        next.push(z);
                    }
                }
            }
        }
        frontier = next;
    }
    let mut all: Vec<Vec<i64>> = known.into_keys().collect();
    all.sort_by_key(|x| (x.iter().sum::<i64>(), x.clone()));
    all
}

/// Gram matrix of the fundamental weights: G = C⁻¹ · diag(d), computed
/// by exact Gauss-Jordan elimination.
fn gram_matrix(cartan: &[Vec<i64>], sym: &[Rational64]) -> Vec<Vec<BigRational>> {
    let l = cartan.len();
    let big = |r: Rational64| BigRational::new(BigInt::from(*r.numer()), BigInt::from(*r.denom()));
    // Augmented [C | I].
    let mut a: Vec<Vec<BigRational>> = (0..l)
        .map(|i| {
            (0..2 * l)
                .map(|j| {
                    if j < l {
                        BigRational::from_integer(BigInt::from(cartan[i][j]))
                    } else if j - l == i {
                        BigRational::one()
                    } else {
                        BigRational::zero()
                    }
                })
                .collect()
        })
        .collect();
    for col in 0..l {
        let piv = (col..l)
            .find(|&r| !a[r][col].is_zero())
            .expect("Cartan matrix is invertible");
        a.swap(col, piv);
        let pv = a[col][col].clone();
        for v in &mut a[col] {
            *v /= pv.clone();
        }
        for r in 0..l {
            if r != col && !a[r][col].is_zero() {
                let f = a[r][col].clone();
                for j in 0..2 * l {
                    let sub = &f * &a[col][j];
                    a[r][j] -= sub;
                }
            }
        }
    }
    let g: Vec<Vec<BigRational>> = (0..l)
        .map(|i| (0..l).map(|j| &a[i][l + j] * big(sym[j])).collect())
        .collect();
    for i in 0..l {
        for j in 0..l {
            assert_eq!(g[i][j], g[j][i], "form must be symmetric");
        }
    }
    g
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Signed;

    fn rs(s: Series, rank: usize) -> RootSystem {
        RootSystem::new(LieType::new(s, rank).unwrap())
    }

    fn rational(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn rank_constraints() {
        for (s, rank) in [
            (Series::A, 0),
            (Series::B, 2),
            (Series::C, 1),
            (Series::D, 3),
            (Series::E, 5),
            (Series::E, 9),
            (Series::F, 3),
            (Series::G, 1),
        ] {
            let err = LieType::new(s, rank).unwrap_err();
            match err {
                Error::InvalidRank { series, .. } => assert_eq!(series, s),
                other => panic!("expected InvalidRank, got {other:?}"),
            }
            // The message names the series and the allowed range.
            let msg = err.to_string();
            assert!(msg.contains(&s.to_string()) && msg.contains("rank"), "{msg}");
        }
        for (s, rank) in [
            (Series::A, 1),
            (Series::B, 3),
            (Series::C, 2),
            (Series::D, 4),
            (Series::E, 6),
            (Series::F, 4),
            (Series::G, 2),
        ] {
            assert!(LieType::new(s, rank).is_ok());
        }
    }

    #[test]
    fn parse_and_display() {
        let t: LieType = "B5".parse().unwrap();
        assert_eq!((t.series(), t.rank()), (Series::B, 5));
        assert_eq!(t.to_string(), "B5");
        assert_eq!("e7".parse::<LieType>().unwrap().to_string(), "E7");
        assert!("H3".parse::<LieType>().is_err());
        assert!("B".parse::<LieType>().is_err());
        assert!("5".parse::<LieType>().is_err());
        assert!("B2".parse::<LieType>().is_err());
    }

    #[test]
    fn a1_basics() {
        let r = rs(Series::A, 1);
        assert_eq!(r.positive_roots().len(), 1);
        assert_eq!(r.dimension(), 3);
        assert_eq!(r.highest_root(), &Weight::new(vec![2]));
        let w = Weight::fundamental(1, 1);
        assert_eq!(r.inner_product(&w, &w).unwrap(), rational(1, 2));
    }

    #[test]
    fn root_counts() {
        assert_eq!(rs(Series::G, 2).positive_roots().len(), 6);
        assert_eq!(rs(Series::G, 2).dimension(), 14);
        assert_eq!(rs(Series::E, 8).positive_roots().len(), 120);
        assert_eq!(rs(Series::E, 8).dimension(), 248);
        assert_eq!(rs(Series::F, 4).positive_roots().len(), 24);
        assert_eq!(rs(Series::B, 4).dimension(), 36);
        assert_eq!(rs(Series::D, 5).dimension(), 45);
    }

    #[test]
    fn cartan_entries_in_range() {
        for (s, rank) in [
            (Series::A, 5),
            (Series::B, 6),
            (Series::C, 4),
            (Series::D, 7),
            (Series::E, 8),
            (Series::F, 4),
            (Series::G, 2),
        ] {
            let r = rs(s, rank);
            for (i, row) in r.cartan().iter().enumerate() {
                for (j, &v) in row.iter().enumerate() {
                    if i == j {
                        assert_eq!(v, 2);
                    } else {
                        assert!((-3..=0).contains(&v), "{s}{rank} C[{i}][{j}] = {v}");
                    }
                }
            }
        }
    }

    #[test]
    fn comark_tables() {
        let cases: [(Series, usize, &[i64]); 9] = [
            (Series::A, 5, &[1, 1, 1, 1, 1]),
            (Series::B, 5, &[1, 2, 2, 2, 1]),
            (Series::C, 4, &[1, 1, 1, 1]),
            (Series::D, 6, &[1, 2, 2, 2, 1, 1]),
            (Series::G, 2, &[1, 2]),
            (Series::F, 4, &[2, 3, 2, 1]),
            (Series::E, 6, &[1, 2, 2, 3, 2, 1]),
            (Series::E, 7, &[2, 2, 3, 4, 3, 2, 1]),
            (Series::E, 8, &[2, 3, 4, 6, 5, 4, 3, 2]),
        ];
        for (s, rank, want) in cases {
            assert_eq!(rs(s, rank).coroot_decomposition(), want, "{s}{rank}");
        }
    }

    #[test]
    fn d_of_g_table() {
        let cases = [
            (Series::A, 1, 1),
            (Series::A, 10, 1),
            (Series::C, 2, 1),
            (Series::C, 10, 1),
            (Series::B, 3, 2),
            (Series::B, 10, 2),
            (Series::D, 4, 2),
            (Series::D, 10, 2),
            (Series::G, 2, 2),
            (Series::F, 4, 6),
            (Series::E, 6, 6),
            (Series::E, 7, 12),
            (Series::E, 8, 60),
        ];
        for (s, rank, want) in cases {
            assert_eq!(rs(s, rank).d_of_g(), want, "{s}{rank}");
        }
    }

    #[test]
    fn dual_coxeter_numbers() {
        let cases = [
            (Series::A, 1, 2),
            (Series::A, 7, 8),
            (Series::B, 3, 5),
            (Series::C, 2, 3),
            (Series::D, 4, 6),
            (Series::G, 2, 4),
            (Series::F, 4, 9),
            (Series::E, 6, 12),
            (Series::E, 7, 18),
            (Series::E, 8, 30),
        ];
        for (s, rank, want) in cases {
            assert_eq!(rs(s, rank).dual_coxeter_number(), want, "{s}{rank}");
        }
    }

    #[test]
    fn theta_has_norm_two_and_is_long() {
        for (s, ranks) in [
            (Series::A, 1..=8),
            (Series::B, 3..=8),
            (Series::C, 2..=8),
            (Series::D, 4..=8),
            (Series::E, 6..=8),
            (Series::F, 4..=4),
            (Series::G, 2..=2),
        ] {
            for rank in ranks {
                let r = rs(s, rank);
                let two = rational(2, 1);
                let theta = r.highest_root().clone();
                assert_eq!(r.inner_product(&theta, &theta).unwrap(), two);
                for root in r.positive_roots() {
                    let n = r.inner_product(root.weight(), root.weight()).unwrap();
                    assert!(n <= two, "{s}{rank}: root longer than theta");
                    assert!(
                        n == two || n == rational(1, 1) || n == rational(2, 3),
                        "{s}{rank}: unexpected root norm {n}"
                    );
                }
            }
        }
    }

    #[test]
    fn fundamental_coroot_duality() {
        // <w_i, a_j^v> = delta_ij, evaluated through the rational form.
        for (s, rank) in [(Series::B, 4), (Series::G, 2), (Series::E, 6), (Series::C, 3)] {
            let r = rs(s, rank);
            let simple: Vec<&Root> = r
                .positive_roots()
                .iter()
                .filter(|root| root.height() == 1)
                .collect();
            assert_eq!(simple.len(), rank);
            for i in 1..=rank {
                let w = Weight::fundamental(rank, i);
                for root in &simple {
                    let j = root
                        .simple_coords()
                        .iter()
                        .position(|&c| c == 1)
                        .unwrap();
                    let norm = r.inner_product(root.weight(), root.weight()).unwrap();
                    let pairing =
                        r.inner_product(&w, root.weight()).unwrap() * rational(2, 1) / norm;
                    let want = if i - 1 == j { 1 } else { 0 };
                    assert_eq!(pairing, rational(want, 1), "{s}{rank} w{i} a{j}");
                }
            }
        }
    }

    #[test]
    fn coroot_pairing_matches_form() {
        // The integer coroot coordinates agree with 2<w,b>/<b,b>.
        for (s, rank) in [(Series::B, 3), (Series::C, 4), (Series::F, 4), (Series::G, 2)] {
            let r = rs(s, rank);
            for root in r.positive_roots() {
                for i in 1..=rank {
                    let w = Weight::fundamental(rank, i);
                    let norm = r.inner_product(root.weight(), root.weight()).unwrap();
                    let via_form =
                        r.inner_product(&w, root.weight()).unwrap() * rational(2, 1) / norm;
                    let via_int = coroot_pairing(&w, root.coroot_coords());
                    assert_eq!(via_form, rational(via_int, 1));
                }
            }
        }
    }

    #[test]
    fn form_is_positive_definite() {
        // Leading principal minors of the Gram matrix are positive.
        for (s, rank) in [
            (Series::A, 4),
            (Series::B, 5),
            (Series::C, 3),
            (Series::D, 5),
            (Series::E, 7),
            (Series::F, 4),
            (Series::G, 2),
        ] {
            let r = rs(s, rank);
            for k in 1..=rank {
                let mut m: Vec<Vec<BigRational>> = (0..k)
                    .map(|i| (0..k).map(|j| r.form()[i][j].clone()).collect())
                    .collect();
                // Fraction-free enough: plain Gaussian elimination, product of pivots.
                let mut det = BigRational::one();
                for col in 0..k {
                    let piv = (col..k).find(|&row| !m[row][col].is_zero());
                    let piv = match piv {
                        Some(p) => p,
                        None => {
                            det = BigRational::zero();
                            break;
                        }
                    };
                    if piv != col {
                        m.swap(piv, col);
                        det = -det;
                    }
                    det *= m[col][col].clone();
                    let pv = m[col][col].clone();
                    for row in col + 1..k {
                        let f = &m[row][col] / &pv;
                        for j in col..k {
                            let sub = &f * &m[col][j];
                            m[row][j] -= sub;
                        }
                    }
                }
                assert!(det.is_positive(), "{s}{rank} leading minor {k} not positive");
            }
        }
    }

    #[test]
    fn dual_weights() {
        let e6 = rs(Series::E, 6);
        assert_eq!(
            e6.dual_weight(&Weight::fundamental(6, 1)).unwrap(),
            Weight::fundamental(6, 6)
        );
        assert_eq!(
            e6.dual_weight(&Weight::fundamental(6, 3)).unwrap(),
            Weight::fundamental(6, 5)
        );
        let b3 = rs(Series::B, 3);
        assert_eq!(
            b3.dual_weight(&Weight::fundamental(3, 3)).unwrap(),
            Weight::fundamental(3, 3)
        );
        let a2 = rs(Series::A, 2);
        assert_eq!(
            a2.dual_weight(&Weight::fundamental(2, 1)).unwrap(),
            Weight::fundamental(2, 2)
        );
        let a1 = rs(Series::A, 1);
        let w = Weight::new(vec![5]);
        assert_eq!(a1.dual_weight(&w).unwrap(), w);
    }

    #[test]
    fn dual_weight_is_involutive() {
        for (s, rank) in [(Series::A, 3), (Series::D, 5), (Series::E, 6)] {
            let r = rs(s, rank);
            for i in 1..=rank {
                let w = Weight::fundamental(rank, i);
                let d = r.dual_weight(&w).unwrap();
                assert!(d.is_dominant());
                assert_eq!(r.dual_weight(&d).unwrap(), w, "{s}{rank} w{i}");
            }
        }
    }

    #[test]
    fn dual_weight_rejects_non_dominant() {
        let r = rs(Series::A, 2);
        let err = r.dual_weight(&Weight::new(vec![1, -1])).unwrap_err();
        assert!(matches!(err, Error::NotDominant { .. }));
    }

    #[test]
    fn inner_product_rank_mismatch() {
        let r = rs(Series::A, 2);
        let err = r
            .inner_product(&Weight::new(vec![1]), &Weight::new(vec![1, 0]))
            .unwrap_err();
        assert_eq!(
            err,
            Error::RankMismatch {
                expected: 2,
                got: 1
            }
        );
    }

    #[test]
    fn roots_sorted_by_height() {
        let r = rs(Series::F, 4);
        let heights: Vec<i64> = r.positive_roots().iter().map(Root::height).collect();
        let mut sorted = heights.clone();
        sorted.sort();
        assert_eq!(heights, sorted);
        assert_eq!(r.positive_roots().last().unwrap().weight(), r.highest_root());
    }

    #[test]
    fn adjoint_weight_is_dominant() {
        for (s, rank) in [
            (Series::A, 4),
            (Series::B, 3),
            (Series::C, 5),
            (Series::D, 4),
            (Series::E, 7),
            (Series::F, 4),
            (Series::G, 2),
        ] {
            let r = rs(s, rank);
            assert!(r.adjoint_weight().is_dominant(), "{s}{rank}");
        }
    }
}
