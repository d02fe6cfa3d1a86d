//! Decision procedures for componentwise linearity.
//!
//! A `yes` from the initial-ideal and gin tests is certified: a stable
//! initial ideal with the same number of minimal generators forces
//! componentwise linearity in any coordinates. A `no` from the gin test
//! depends on the sampled coordinates being generic and is flagged as
//! probabilistic. The linear-part and direct tests are exact.

use serde::{Deserialize, Serialize};

use crate::betti::BettiTable;
use crate::budget::Budget;
use crate::error::{Error, Result};
use crate::groebner::coords::gin_sample_with_budget;
use crate::groebner::GradedIdeal;
use crate::monomial::MonomialOrder;
use crate::resolution::minimal_resolution_with_budget;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Decision {
    Yes,
    No,
    Inconclusive,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Method {
    Initial,
    Gin,
    LinearPart,
    Direct,
    /// Stability of the initial ideals of the components; never answers `no`.
    InitialComponents,
    Gorenstein,
    Determinantal,
    Symmetric,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::Initial => "initial",
            Method::Gin => "gin",
            Method::LinearPart => "linear-part",
            Method::Direct => "direct",
            Method::InitialComponents => "initial-components",
            Method::Gorenstein => "gorenstein",
            Method::Determinantal => "determinantal",
            Method::Symmetric => "symmetric",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        Ok(match s {
            "initial" => Method::Initial,
            "gin" => Method::Gin,
            "linear-part" => Method::LinearPart,
            "direct" => Method::Direct,
            "initial-components" => Method::InitialComponents,
            "gorenstein" => Method::Gorenstein,
            "determinantal" => Method::Determinantal,
            "symmetric" => Method::Symmetric,
            _ => return Err(Error::InvalidArgument(format!("unknown method {s:?}"))),
        })
    }
}

/// Evidence behind a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum Witness {
    InitialIdeal {
        order: String,
        initial: String,
        stable: bool,
        beta0_ideal: usize,
        beta0_initial: usize,
    },
    Gin {
        order: String,
        gin: String,
        stable: bool,
        beta0_ideal: usize,
        beta0_gin: usize,
        agreed: bool,
        votes: usize,
        trials: usize,
        trial_seeds: Vec<u64>,
        /// Trial whose initial ideal certified a `yes`.
        certifying_trial: Option<usize>,
    },
    LinearPart {
        /// Least homological position with nonzero homology, if any.
        homology_at: Option<usize>,
        betti: BettiTable,
    },
    Direct {
        degrees: Vec<u32>,
        failing_degree: Option<u32>,
    },
    Components {
        degrees: Vec<u32>,
        unstable_degree: Option<u32>,
    },
    Budget {
        limit: u64,
    },
    Classifier {
        reason: String,
    },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CwlVerdict {
    pub method: Method,
    pub decision: Decision,
    pub witness: Witness,
    pub seed: Option<u64>,
    pub probabilistic: bool,
    /// `None` for verdicts read off degree data alone.
    pub characteristic: Option<u32>,
}

impl CwlVerdict {
    fn new(method: Method, decision: Decision, witness: Witness, ideal: &GradedIdeal) -> Self {
        Self {
            method,
            decision,
            witness,
            seed: None,
            probabilistic: false,
            characteristic: Some(ideal.ring().characteristic()),
        }
    }

    pub(crate) fn classifier(method: Method, yes: bool, reason: String, characteristic: Option<u32>) -> Self {
        Self {
            method,
            decision: if yes { Decision::Yes } else { Decision::No },
            witness: Witness::Classifier { reason },
            seed: None,
            probabilistic: false,
            characteristic,
        }
    }

    fn budget(method: Method, ideal: &GradedIdeal, limit: u64) -> Self {
        Self::new(method, Decision::Inconclusive, Witness::Budget { limit }, ideal)
    }
}

/// Randomness and resource settings shared by the tests.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CriteriaConfig {
    pub seed: u64,
    pub trials: usize,
    /// Step budget per test.
    pub budget: u64,
}

impl Default for CriteriaConfig {
    fn default() -> Self {
        Self {
            seed: 0,
            trials: 3,
            budget: u64::MAX,
        }
    }
}

fn budget_or<T>(r: Result<T>) -> Result<Option<T>> {
    match r {
        Ok(v) => Ok(Some(v)),
        Err(Error::BudgetExceeded(_)) => Ok(None),
        Err(e) => Err(e),
    }
}

/// The Betti table of `I` is concentrated on `j = i + d`. Every given
/// generator must have degree `d`.
pub fn has_linear_resolution(ideal: &GradedIdeal, d: u32) -> Result<bool> {
    has_linear_resolution_with_budget(ideal, d, &Budget::unlimited())
}

pub fn has_linear_resolution_with_budget(ideal: &GradedIdeal, d: u32, budget: &Budget) -> Result<bool> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if let Some(g) = ideal.generators().iter().find(|g| g.degree() != Some(d)) {
        return Err(Error::InvalidArgument(format!("generator {g} is not of degree {d}")));
    }
    let f = minimal_resolution_with_budget(ideal, MonomialOrder::Degrevlex, budget)?;
    Ok(f.betti_table()?.to_ideal().is_linear(d as i64))
}

/// Stable initial ideal with the same number of minimal generators.
pub fn test_cwl_initial(ideal: &GradedIdeal, order: MonomialOrder, config: &CriteriaConfig) -> Result<CwlVerdict> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let budget = Budget::new(config.budget);
    let Some(init) = budget_or(ideal.initial_ideal_with_budget(order, &budget))? else {
        return Ok(CwlVerdict::budget(Method::Initial, ideal, config.budget));
    };
    let Some(mingens) = budget_or(ideal.minimal_generators_with_budget(&budget))? else {
        return Ok(CwlVerdict::budget(Method::Initial, ideal, config.budget));
    };
    let stable = init.is_stable();
    let witness = Witness::InitialIdeal {
        order: order.name().into(),
        initial: init.to_string(),
        stable,
        beta0_ideal: mingens.len(),
        beta0_initial: init.beta0(),
    };
    let decision = if stable && init.beta0() == mingens.len() {
        Decision::Yes
    } else if stable && order == MonomialOrder::Degrevlex {
        // with differing counts the answer hinges on generic coordinates
        let mut v = test_cwl_gin(ideal, config)?;
        v.method = Method::Initial;
        return Ok(v);
    } else {
        Decision::Inconclusive
    };
    Ok(CwlVerdict::new(Method::Initial, decision, witness, ideal))
}

/// Sample `in_rev(φ I)` over several coordinate changes.
pub fn test_cwl_gin(ideal: &GradedIdeal, config: &CriteriaConfig) -> Result<CwlVerdict> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if config.trials < 2 {
        return Err(Error::InvalidArgument("gin sampling needs at least two trials".into()));
    }
    let order = MonomialOrder::Degrevlex;
    let budget = Budget::new(config.budget);
    let Some(mingens) = budget_or(ideal.minimal_generators_with_budget(&budget))? else {
        return Ok(CwlVerdict::budget(Method::Gin, ideal, config.budget));
    };
    let beta0 = mingens.len();
    let Some(sample) = budget_or(gin_sample_with_budget(ideal, order, config.seed, config.trials, &budget))? else {
        return Ok(CwlVerdict::budget(Method::Gin, ideal, config.budget));
    };
    let certifying = sample
        .samples
        .iter()
        .position(|(_, m)| m.is_stable() && m.beta0() == beta0);
    let gin = certifying.map_or(&sample.ideal, |t| &sample.samples[t].1);
    let stable = gin.is_stable();
    let decision = if certifying.is_some() { Decision::Yes } else { Decision::No };
    let witness = Witness::Gin {
        order: order.name().into(),
        gin: gin.to_string(),
        stable,
        beta0_ideal: beta0,
        beta0_gin: gin.beta0(),
        agreed: sample.agreed,
        votes: sample.votes,
        trials: config.trials,
        trial_seeds: sample.samples.iter().map(|s| s.0).collect(),
        certifying_trial: certifying,
    };
    let mut v = CwlVerdict::new(Method::Gin, decision, witness, ideal);
    v.seed = Some(config.seed);
    v.probabilistic = decision == Decision::No;
    Ok(v)
}

/// Acyclicity of the linear part of the minimal resolution of `I`.
pub fn test_cwl_linear_part(ideal: &GradedIdeal, config: &CriteriaConfig) -> Result<CwlVerdict> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let budget = Budget::new(config.budget);
    let Some(f) = budget_or(minimal_resolution_with_budget(ideal, MonomialOrder::Degrevlex, &budget))? else {
        return Ok(CwlVerdict::budget(Method::LinearPart, ideal, config.budget));
    };
    let lin = f.ideal_part().linear_part();
    let Some(h) = budget_or(lin.first_homology(&budget))? else {
        return Ok(CwlVerdict::budget(Method::LinearPart, ideal, config.budget));
    };
    let decision = if h.is_none() { Decision::Yes } else { Decision::No };
    let witness = Witness::LinearPart {
        homology_at: h,
        betti: f.betti_table()?,
    };
    Ok(CwlVerdict::new(Method::LinearPart, decision, witness, ideal))
}

/// Check that `I_⟨d⟩` has a `d`-linear resolution for every `d` between
/// the least and the largest degree of a minimal generator. Beyond that
/// range `I_⟨d⟩ = m^(d-D) I_⟨D⟩`, and linearity persists.
pub fn test_cwl_direct(ideal: &GradedIdeal, config: &CriteriaConfig) -> Result<CwlVerdict> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let budget = Budget::new(config.budget);
    let Some(mingens) = budget_or(ideal.minimal_generators_with_budget(&budget))? else {
        return Ok(CwlVerdict::budget(Method::Direct, ideal, config.budget));
    };
    let lo = mingens.iter().map(|g| g.degree().unwrap()).min().unwrap();
    let hi = mingens.iter().map(|g| g.degree().unwrap()).max().unwrap();
    let mut degrees = Vec::new();
    for d in lo..=hi {
        degrees.push(d);
        let comp = ideal.component_ideal(d);
        let Some(lin) = budget_or(has_linear_resolution_with_budget(&comp, d, &budget))? else {
            return Ok(CwlVerdict::budget(Method::Direct, ideal, config.budget));
        };
        if !lin {
            let w = Witness::Direct {
                degrees,
                failing_degree: Some(d),
            };
            return Ok(CwlVerdict::new(Method::Direct, Decision::No, w, ideal));
        }
    }
    let w = Witness::Direct {
        degrees,
        failing_degree: None,
    };
    Ok(CwlVerdict::new(Method::Direct, Decision::Yes, w, ideal))
}

/// Experimental: if `in_rev(I_⟨d⟩)` is stable and generated in degree `d`
/// for every relevant `d`, each component has a linear resolution.
/// Answers `yes` or `inconclusive`, never `no`.
pub fn test_cwl_initial_components(ideal: &GradedIdeal, config: &CriteriaConfig) -> Result<CwlVerdict> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    let budget = Budget::new(config.budget);
    let Some(mingens) = budget_or(ideal.minimal_generators_with_budget(&budget))? else {
        return Ok(CwlVerdict::budget(Method::InitialComponents, ideal, config.budget));
    };
    let lo = mingens.iter().map(|g| g.degree().unwrap()).min().unwrap();
    let hi = mingens.iter().map(|g| g.degree().unwrap()).max().unwrap();
    let mut degrees = Vec::new();
    for d in lo..=hi {
        degrees.push(d);
        let comp = ideal.component_ideal(d);
        let Some(init) = budget_or(comp.initial_ideal_with_budget(MonomialOrder::Degrevlex, &budget))? else {
            return Ok(CwlVerdict::budget(Method::InitialComponents, ideal, config.budget));
        };
        let ok = init.is_stable() && init.generators().iter().all(|g| g.degree() == d);
        if !ok {
            let w = Witness::Components {
                degrees,
                unstable_degree: Some(d),
            };
            return Ok(CwlVerdict::new(Method::InitialComponents, Decision::Inconclusive, w, ideal));
        }
    }
    let w = Witness::Components {
        degrees,
        unstable_degree: None,
    };
    Ok(CwlVerdict::new(Method::InitialComponents, Decision::Yes, w, ideal))
}

/// Dispatch on `method` for the ideal-based tests.
pub fn run_method(method: Method, ideal: &GradedIdeal, order: MonomialOrder, config: &CriteriaConfig) -> Result<CwlVerdict> {
    match method {
        Method::Initial => test_cwl_initial(ideal, order, config),
        Method::Gin => test_cwl_gin(ideal, config),
        Method::LinearPart => test_cwl_linear_part(ideal, config),
        Method::Direct => test_cwl_direct(ideal, config),
        Method::InitialComponents => test_cwl_initial_components(ideal, config),
        other => Err(Error::InvalidArgument(format!(
            "{} is a classifier, not an ideal test",
            other.name()
        ))),
    }
}
