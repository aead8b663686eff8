//! Dynkin indices by two independent routes, the tensor rule,
//! orthogonality detection, fundamental-index tables, and the cokernel
//! bound γ_G.
//!
//! Route one is the closed form m = c(λ)·dim V(λ) / dim 𝔤 (Casimir times
//! Weyl dimension). Route two is a character sum over the full weight
//! system, (1/2)·Σ n_μ⟨μ,θ∨⟩², computed by Freudenthal's recursion with
//! no shared inputs beyond the root system itself. Their exact agreement
//! is the crate's core self-check; disagreement with the published
//! reference tables is reported, never auto-resolved.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::reference;
use crate::representation::{
    weight_system_with_cap, weyl_dimension, WeightMultiset, DEFAULT_MASS_CAP,
};
use crate::rootsystem::{RootSystem, Weight};
use crate::{casimir_eigenvalue, LieType};

/// Whether to run the character-sum oracle alongside the closed form.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum OracleMode {
    /// Always run; exceeding the mass cap is a hard error.
    On,
    /// Never run.
    Off,
    /// Run only when the dimension is under the mass cap.
    #[default]
    Auto,
}

/// Everything computed about one irreducible representation, with both
/// index routes and the published reference value when one exists.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct IndexReport {
    pub lie_type: LieType,
    pub lam: Weight,
    #[serde(with = "crate::serdes::bigint")]
    pub dim: BigInt,
    #[serde(with = "crate::serdes::ratio")]
    pub casimir: BigRational,
    #[serde(with = "crate::serdes::bigint")]
    pub index_closed: BigInt,
    /// Character-sum route; absent when the oracle was skipped (off, or
    /// auto with the dimension over the cap).
    #[serde(with = "crate::serdes::ratio_opt")]
    pub index_oracle: Option<BigRational>,
    /// Published value, when the reference tables state one for this λ.
    #[serde(with = "crate::serdes::bigint_opt")]
    pub reference_value: Option<BigInt>,
    /// True unless the oracle ran and disagreed with the closed form.
    pub agree_internal: bool,
    /// Closed form vs. published value; absent without a reference.
    pub agree_reference: Option<bool>,
    /// True when V(λ) carries an invariant symmetric form.
    pub orthogonal: bool,
}

/// Dynkin index of V(λ) by the closed form: Casimir eigenvalue times
/// dimension, divided by dim 𝔤. The exact rational must reduce to an
/// integer; a non-integral value signals a construction bug and surfaces
/// as an internal-inconsistency error, never a user error.
pub fn dynkin_index(rs: &RootSystem, lam: &Weight) -> Result<BigInt> {
    let dim = weyl_dimension(rs, lam)?;
    let casimir = casimir_eigenvalue(rs, lam)?;
    let m = casimir * BigRational::new(dim, BigInt::from(rs.dimension()));
    if !m.is_integer() {
        return Err(Error::InternalInconsistency(format!(
            "index of {lam} for {} is not an integer: {m}",
            rs.lie_type()
        )));
    }
    let m = m.to_integer();
    debug_assert!(!m.is_negative());
    Ok(m)
}

/// Dynkin index from a character: (1/2)·Σ n_μ·⟨μ,θ∨⟩² over the multiset.
/// Exact; equals `dynkin_index` of the highest weight whenever the input
/// is a genuine weight system, but is defined (and rational) for any
/// multiset, including tensor convolutions and direct sums.
pub fn dynkin_index_oracle(rs: &RootSystem, ws: &WeightMultiset) -> Result<BigRational> {
    if ws.rank() != rs.rank() {
        return Err(Error::RankMismatch {
            expected: rs.rank(),
            got: ws.rank(),
        });
    }
    let mut acc: i128 = 0;
    for (w, m) in ws.iter() {
        let p = rs.theta_coroot_pairing(w)? as i128;
        acc += m as i128 * p * p;
    }
    Ok(BigRational::new(BigInt::from(acc), BigInt::from(2)))
}

/// Index of a tensor product by the product rule:
/// m_{V(λ)⊗V(μ)} = m_{V(λ)}·dim V(μ) + m_{V(μ)}·dim V(λ).
pub fn tensor_index(rs: &RootSystem, lam: &Weight, mu: &Weight) -> Result<BigInt> {
    let m_lam = dynkin_index(rs, lam)?;
    let m_mu = dynkin_index(rs, mu)?;
    let d_lam = weyl_dimension(rs, lam)?;
    let d_mu = weyl_dimension(rs, mu)?;
    Ok(m_lam * d_mu + m_mu * d_lam)
}

/// Whether V(λ) is orthogonal: self-dual with an invariant *symmetric*
/// (rather than alternating) form, decided by the Frobenius–Schur
/// criterion — self-dual λ is orthogonal iff (−1)^{⟨λ,2ρ∨⟩} = +1, where
/// 2ρ∨ is the sum of the positive coroots. The adjoint representation is
/// always orthogonal (the invariant form lives on 𝔤 itself).
pub fn is_orthogonal(rs: &RootSystem, lam: &Weight) -> Result<bool> {
    rs.check_dominant(lam)?;
    if &rs.dual_weight(lam)? != lam {
        return Ok(false);
    }
    let pairing: i64 = lam
        .coords()
        .iter()
        .zip(rs.two_rho_coroot())
        .map(|(&a, &b)| a * b)
        .sum();
    Ok(pairing % 2 == 0)
}

/// Full report for one highest weight: dimension, Casimir, both index
/// routes (oracle per `mode`/`cap`), reference comparison, orthogonality.
pub fn index_report(
    rs: &RootSystem,
    lam: &Weight,
    mode: OracleMode,
    cap: u64,
) -> Result<IndexReport> {
    let dim = weyl_dimension(rs, lam)?;
    let casimir = casimir_eigenvalue(rs, lam)?;
    let index_closed = dynkin_index(rs, lam)?;
    let index_oracle = match mode {
        OracleMode::Off => None,
        OracleMode::On => {
            let ws = weight_system_with_cap(rs, lam, cap)?;
            Some(dynkin_index_oracle(rs, &ws)?)
        }
        OracleMode::Auto => match weight_system_with_cap(rs, lam, cap) {
            Ok(ws) => Some(dynkin_index_oracle(rs, &ws)?),
            Err(Error::CapExceeded { .. }) => None,
            Err(e) => return Err(e),
        },
    };
    let reference_value = fundamental_position(lam)
        .and_then(|i| reference::fundamental_index_reference(rs.lie_type())[i].clone());
    let agree_internal = match &index_oracle {
        Some(o) => o == &BigRational::from_integer(index_closed.clone()),
        None => true,
    };
    let agree_reference = reference_value.as_ref().map(|r| r == &index_closed);
    Ok(IndexReport {
        lie_type: rs.lie_type(),
        lam: lam.clone(),
        dim,
        casimir,
        index_closed,
        index_oracle,
        reference_value,
        agree_internal,
        agree_reference,
        orthogonal: is_orthogonal(rs, lam)?,
    })
}

/// The index i (0-based) such that λ = ωᵢ₊₁, when λ is fundamental.
fn fundamental_position(lam: &Weight) -> Option<usize> {
    let coords = lam.coords();
    if coords.iter().sum::<i64>() != 1 {
        return None;
    }
    coords.iter().position(|&c| c == 1)
}

/// Reports for all ℓ fundamental representations in Bourbaki order, with
/// the oracle run wherever the default cap allows.
pub fn fundamental_index_table(rs: &RootSystem) -> Vec<IndexReport> {
    fundamental_index_table_with(rs, OracleMode::Auto, DEFAULT_MASS_CAP)
        .expect("auto mode cannot fail on fundamental weights")
}

/// Reports for all ℓ fundamental representations with explicit oracle
/// control. Fails only in `On` mode when a dimension exceeds the cap.
pub fn fundamental_index_table_with(
    rs: &RootSystem,
    mode: OracleMode,
    cap: u64,
) -> Result<Vec<IndexReport>> {
    (1..=rs.rank())
        .map(|i| index_report(rs, &Weight::fundamental(rs.rank(), i), mode, cap))
        .collect()
}

/// Outcome of checking the divisibility theorem for a batch of weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DivisibilityReport {
    /// Per input weight: whether d(𝔤) divides its Dynkin index.
    pub divisible: Vec<bool>,
    /// Whether some fundamental representation attains the index d(𝔤)
    /// exactly (the existence half of the divisibility theorem).
    pub attained_by_fundamental: bool,
}

impl DivisibilityReport {
    pub fn all_divisible(&self) -> bool {
        self.divisible.iter().all(|&b| b)
    }
}

/// Checks that d(𝔤) divides the Dynkin index of each given dominant
/// weight, and that the minimum d(𝔤) is attained among the fundamental
/// representations. Failures are reported in the result, not raised.
pub fn divisibility_check(rs: &RootSystem, lams: &[Weight]) -> Result<DivisibilityReport> {
    let d = BigInt::from(rs.d_of_g());
    let divisible = lams
        .iter()
        .map(|lam| Ok((dynkin_index(rs, lam)? % &d).is_zero()))
        .collect::<Result<Vec<bool>>>()?;
    let mut attained = false;
    for i in 1..=rs.rank() {
        if dynkin_index(rs, &Weight::fundamental(rs.rank(), i))? == d {
            attained = true;
            break;
        }
    }
    Ok(DivisibilityReport {
        divisible,
        attained_by_fundamental: attained,
    })
}

/// Upper bound for the order γ_G of the Picard-embedding cokernel.
///
/// Unconditionally (flag false) the bound is d(𝔤): the minimal index over
/// all representations. With `assume_square_root` (granting that theta
/// bundles of orthogonal representations admit square roots — a published
/// conjecture, so callers must label such output conditional), orthogonal
/// representations of even index contribute half their index, and the
/// bound becomes the gcd over the fundamental representations plus the
/// adjoint.
pub fn gamma_bound(rs: &RootSystem, assume_square_root: bool) -> u64 {
    if !assume_square_root {
        return rs.d_of_g();
    }
    let mut candidates: Vec<Weight> = (1..=rs.rank())
        .map(|i| Weight::fundamental(rs.rank(), i))
        .collect();
    candidates.push(rs.adjoint_weight());
    gamma_bound_with_candidates(rs, &candidates)
        .expect("fundamental and adjoint weights are valid candidates")
}

/// The square-root-conditional bound over an explicit candidate set:
/// gcd of {m(λ)} with orthogonal even-index candidates contributing
/// m(λ)/2. Odd orthogonal indices are not halved — a half-integral level
/// is not a line-bundle level.
pub fn gamma_bound_with_candidates(rs: &RootSystem, candidates: &[Weight]) -> Result<u64> {
    let mut acc = BigInt::zero();
    for lam in candidates {
        let m = dynkin_index(rs, lam)?;
        if m.is_zero() {
            continue;
        }
        let contribution = if is_orthogonal(rs, lam)? && (&m % 2u8).is_zero() {
            m / 2
        } else {
            m
        };
        acc = num_integer::gcd(acc, contribution);
    }
    u64::try_from(&acc).map_err(|_| {
        Error::InternalInconsistency(format!("gamma bound out of u64 range: {acc}"))
    })
}

/// Level of the lift of the dualizing sheaf: −2·(dual Coxeter number).
pub fn canonical_level(rs: &RootSystem) -> i64 {
    -2 * rs.dual_coxeter_number() as i64
}

/// The first fundamental weight (1-based position) whose Dynkin index
/// equals d(𝔤) exactly, if any. One always exists for the simple types;
/// the option encodes "not found" as a reportable outcome rather than a
/// panic so a construction bug surfaces as a failed check.
pub fn attaining_fundamental(rs: &RootSystem) -> Result<Option<usize>> {
    let d = BigInt::from(rs.d_of_g());
    for i in 1..=rs.rank() {
        if dynkin_index(rs, &Weight::fundamental(rs.rank(), i))? == d {
            return Ok(Some(i));
        }
    }
    Ok(None)
}
