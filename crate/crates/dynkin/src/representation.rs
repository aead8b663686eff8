//! Exact representation-theoretic quantities: Weyl dimension, Casimir
//! eigenvalue, full weight systems with multiplicities (Freudenthal's
//! recursion), and tensor-product weight multisets.
//!
//! The weight system is the crate's independent oracle: it is computed
//! without reference to the closed-form index, so agreement between the
//! two routes is a genuine cross-check. All arithmetic is exact; the
//! Freudenthal recursion runs in scaled-integer form (the invariant form
//! times the smallest integer that clears its denominators).

use std::collections::HashMap;
use std::collections::btree_map::{BTreeMap, Entry};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::One;

use crate::error::{Error, Result};
use crate::rootsystem::{RootSystem, Weight};

/// Default ceiling on the total mass (Σ multiplicities = dimension) a
/// weight-system computation will attempt. Beyond this the oracle fails
/// loudly rather than truncate; the closed-form route has no such limit.
pub const DEFAULT_MASS_CAP: u64 = 2_000_000;

/// A finite map from weights to positive integer multiplicities: the
/// support of a character. Total mass equals the dimension of the
/// representation (or product of dimensions, for tensor convolutions).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightMultiset {
    rank: usize,
    entries: BTreeMap<Weight, u64>,
}

impl WeightMultiset {
    pub fn new(rank: usize) -> WeightMultiset {
        WeightMultiset {
            rank,
            entries: BTreeMap::new(),
        }
    }

    /// The multiset {0: 1} of the trivial representation.
    pub fn trivial(rank: usize) -> WeightMultiset {
        let mut ws = WeightMultiset::new(rank);
        ws.add(Weight::zero(rank), 1);
        ws
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Adds `mult` to the multiplicity of `w`. Zero increments are ignored
    /// so the support never contains zero-multiplicity entries.
    pub fn add(&mut self, w: Weight, mult: u64) {
        assert_eq!(w.rank(), self.rank, "weight rank mismatch");
        if mult == 0 {
            return;
        }
        match self.entries.entry(w) {
            Entry::Vacant(e) => {
                e.insert(mult);
            }
            Entry::Occupied(mut e) => *e.get_mut() += mult,
        }
    }

    pub fn multiplicity(&self, w: &Weight) -> u64 {
        self.entries.get(w).copied().unwrap_or(0)
    }

    /// Number of distinct weights in the support.
    pub fn support_len(&self) -> usize {
        self.entries.len()
    }

    /// Total mass Σ multiplicities.
    pub fn mass(&self) -> u128 {
        self.entries.values().map(|&m| m as u128).sum()
    }

    /// Deterministic (sorted) iteration over (weight, multiplicity).
    pub fn iter(&self) -> impl Iterator<Item = (&Weight, u64)> {
        self.entries.iter().map(|(w, &m)| (w, m))
    }

    /// Pointwise negation of every weight (the dual character).
    pub fn negated(&self) -> WeightMultiset {
        let mut out = WeightMultiset::new(self.rank);
        for (w, m) in self.iter() {
            out.add(w.negated(), m);
        }
        out
    }

    /// Disjoint union (direct sum of representations): multiplicities add.
    pub fn union(&self, other: &WeightMultiset) -> Result<WeightMultiset> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch {
                expected: self.rank,
                got: other.rank,
            });
        }
        let mut out = self.clone();
        for (w, m) in other.iter() {
            out.add(w.clone(), m);
        }
        Ok(out)
    }

    /// Σ n_λ·λ as an exact coordinate vector. Zero for any character of a
    /// finite-dimensional representation (the Weyl group averages it out).
    pub fn first_moment(&self) -> Vec<i128> {
        let mut acc = vec![0i128; self.rank];
        for (w, m) in self.iter() {
            for (a, &c) in acc.iter_mut().zip(w.coords()) {
                *a += m as i128 * c as i128;
            }
        }
        acc
    }
}

/// dim V(λ) by the Weyl dimension formula Π_{β>0} ⟨λ+ρ,β∨⟩ / ⟨ρ,β∨⟩,
/// evaluated as one exact rational product (reduced incrementally) and
/// asserted integral.
pub fn weyl_dimension(rs: &RootSystem, lam: &Weight) -> Result<BigInt> {
    rs.check_dominant(lam)?;
    let mut prod = BigRational::one();
    for root in rs.positive_roots() {
        let mut num = 0i64;
        let mut den = 0i64;
        for (&y, &l) in root.coroot_coords().iter().zip(lam.coords()) {
            num += y * (l + 1);
            den += y;
        }
        prod *= BigRational::new(BigInt::from(num), BigInt::from(den));
    }
    if !prod.is_integer() {
        return Err(Error::InternalInconsistency(format!(
            "Weyl dimension of {lam} is not an integer: {prod}"
        )));
    }
    Ok(prod.to_integer())
}

/// Casimir eigenvalue ⟨λ+ρ,λ+ρ⟩ − ⟨ρ,ρ⟩ = ⟨λ, λ+2ρ⟩; zero iff λ = 0.
pub fn casimir_eigenvalue(rs: &RootSystem, lam: &Weight) -> Result<BigRational> {
    rs.check_dominant(lam)?;
    let shifted = Weight::new(lam.coords().iter().map(|&c| c + 2).collect());
    rs.inner_product(lam, &shifted)
}

/// The full weight system of V(λ) under the default mass cap.
pub fn weight_system(rs: &RootSystem, lam: &Weight) -> Result<WeightMultiset> {
    weight_system_with_cap(rs, lam, DEFAULT_MASS_CAP)
}

/// The full weight system of V(λ): every weight with its exact
/// multiplicity, total mass equal to dim V(λ).
///
/// Computed by Freudenthal's recursion over the dominant weights of the
/// support (ordered by increasing height of λ−μ, so every term on the
/// right-hand side is already known), then propagated to each Weyl orbit.
/// The recursion needs weights above μ before μ itself, which is why the
/// processing order starts at λ and works downward. The cap is checked
/// against the closed-form dimension before any enumeration, so exceeding
/// it is a fast, explicit error — never a silent truncation.
pub fn weight_system_with_cap(rs: &RootSystem, lam: &Weight, cap: u64) -> Result<WeightMultiset> {
    rs.check_dominant(lam)?;
    let dim = weyl_dimension(rs, lam)?;
    if dim > BigInt::from(cap) {
        return Err(Error::CapExceeded {
            weight: lam.to_string(),
            mass: dim,
            cap,
        });
    }
    let l = rs.rank();
    let cartan = rs.cartan();
    let sd = rs.scaled_symmetrizer();

    // Dominantize `mu` in place while maintaining `c` = simple-root
    // coordinates of lam - mu (reflection at i with mu_i = t < 0 sends
    // mu to mu - t * C_row_i, hence c_i  to c_i + t).
    let dominantize = |mu: &mut [i64], c: &mut [i64]| loop {
        match mu.iter().position(|&v| v < 0) {
            None => return,
            Some(i) => {
                let t = mu[i];
                for (k, v) in mu.iter_mut().enumerate() {
                    *v -= t * cartan[i][k];
                }
                c[i] += t;
            }
        }
    };

    // Support BFS from lam: subtract simple roots; nu belongs to the
    // support iff lam - dom(nu) is a non-negative combination of simple
    // roots, i.e. the tracked c-vector stays componentwise >= 0 after
    // dominantization. Keyed by omega-coordinates; value is c.
    let mut support: HashMap<Vec<i64>, Vec<i64>> = HashMap::new();
    support.insert(lam.coords().to_vec(), vec![0; l]);
    let mut stack: Vec<Vec<i64>> = vec![lam.coords().to_vec()];
    while let Some(mu) = stack.pop() {
        let c = support[&mu].clone();
        for i in 0..l {
            let mut nu: Vec<i64> = (0..l).map(|k| mu[k] - cartan[i][k]).collect();
            if support.contains_key(&nu) {
                continue;
            }
            let mut cc = c.clone();
            cc[i] += 1;
            let keep_nu = nu.clone();
            let mut dc = cc.clone();
            dominantize(&mut nu, &mut dc);
            if dc.iter().all(|&v| v >= 0) {
                support.insert(keep_nu.clone(), cc);
                stack.push(keep_nu);
            }
        }
    }

    // Dominant members, by increasing height of lam - mu; ties broken
    // lexicographically for determinism (the order among equal heights is
    // immaterial to the recursion).
    let mut dominant: Vec<(Vec<i64>, Vec<i64>)> = support
        .iter()
        .filter(|(mu, _)| mu.iter().all(|&v| v >= 0))
        .map(|(mu, c)| (mu.clone(), c.clone()))
        .collect();
    dominant.sort_by_key(|(mu, c)| (c.iter().sum::<i64>(), mu.clone()));

    // Positive roots with omega-coordinates and the scaled pairing vector
    // p such that <w, beta> * form_scale = p . w.
    let roots: Vec<(Vec<i64>, Vec<i64>)> = rs
        .positive_roots()
        .iter()
        .map(|r| {
            let omega = r.weight().coords().to_vec();
            let scaled: Vec<i64> = r
                .simple_coords()
                .iter()
                .zip(sd)
                .map(|(&x, &d)| x * d)
                .collect();
            (omega, scaled)
        })
        .collect();

    let mut mults: HashMap<Vec<i64>, u64> = HashMap::new();
    for (mu, c) in &dominant {
        let height: i64 = c.iter().sum();
        if height == 0 {
            mults.insert(mu.clone(), 1);
            continue;
        }
        // Freudenthal: n_mu * (<lam+rho,lam+rho> - <mu+rho,mu+rho>)
        //            = 2 Σ_{beta>0} Σ_{k>=1} n_{mu+k beta} <mu+k beta, beta>.
        // Both sides are scaled by form_scale, which cancels.
        let mut num: i128 = 0;
        for (omega, scaled) in &roots {
            let mut nu: Vec<i64> = mu.clone();
            loop {
                for (v, o) in nu.iter_mut().zip(omega) {
                    *v += o;
                }
                if !support.contains_key(&nu) {
                    break;
                }
                let pairing: i64 = scaled.iter().zip(&nu).map(|(&p, &v)| p * v).sum();
                let mut dom = nu.clone();
                let mut junk = vec![0i64; l];
                dominantize(&mut dom, &mut junk);
                let n = mults[&dom];
                num += n as i128 * pairing as i128;
            }
        }
        // Denominator <lam+mu+2rho, lam-mu> * form_scale, via lam-mu = Σ c_i α_i
        // and <w, α_i> = d_i * w_i.
        let den: i128 = (0..l)
            .map(|i| c[i] as i128 * sd[i] as i128 * (lam.coords()[i] + mu[i] + 2) as i128)
            .sum();
        let twice = 2 * num;
        if den <= 0 || twice <= 0 || twice % den != 0 {
            return Err(Error::InternalInconsistency(format!(
                "Freudenthal recursion produced non-positive or non-integral \
                 multiplicity at {mu:?}: 2*{num}/{den}"
            )));
        }
        mults.insert(mu.clone(), (twice / den) as u64);
    }

    // Propagate each dominant multiplicity across its Weyl orbit: every
    // support weight takes the multiplicity of its dominant representative.
    let mut out = WeightMultiset::new(l);
    for mu in support.keys() {
        let mut dom = mu.clone();
        let mut junk = vec![0i64; l];
        dominantize(&mut dom, &mut junk);
        out.add(Weight::new(mu.clone()), mults[&dom]);
    }

    if out.mass() != u128::try_from(&dim).expect("dim <= cap fits u128") {
        return Err(Error::InternalInconsistency(format!(
            "weight system of {lam} has mass {} but dimension {dim}",
            out.mass()
        )));
    }
    Ok(out)
}

/// Convolution of two weight multisets: the weight multiset of the tensor
/// product. Multiplicity of ν is Σ_{λ+μ=ν} n_λ·m_μ; total mass is the
/// product of the input masses. Deliberately a direct double loop over
/// both supports — this is oracle code and stays obviously correct.
pub fn tensor_weight_multiset(a: &WeightMultiset, b: &WeightMultiset) -> Result<WeightMultiset> {
    if a.rank() != b.rank() {
        return Err(Error::RankMismatch {
            expected: a.rank(),
            got: b.rank(),
        });
    }
    let mut out = WeightMultiset::new(a.rank());
    for (wa, ma) in a.iter() {
        for (wb, mb) in b.iter() {
            out.add(wa + wb, ma * mb);
        }
    }
    Ok(out)
}
