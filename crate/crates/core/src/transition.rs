//! Transition functions `φ` with `A∘φ = A` and the cyclic groups they form.

use std::sync::OnceLock;

use crate::boettcher::{boettcher, BoettcherData};
use crate::error::{Error, Result};
use crate::field::{Field, FieldElement};
use crate::series::{GammaSeries, TruncatedSeries, UnitSeries};

/// The cyclic group `{β∘εz∘β^{-1} : ε ∈ U_n}`.
#[derive(Debug)]
pub struct TransitionGroup {
    order: usize,
    beta: UnitSeries,
    beta_inv: UnitSeries,
    generator: UnitSeries,
    elements: OnceLock<Vec<UnitSeries>>,
}

impl Clone for TransitionGroup {
    fn clone(&self) -> Self {
        let elements = OnceLock::new();
        if let Some(v) = self.elements.get() {
            let _ = elements.set(v.clone());
        }
        TransitionGroup {
            order: self.order,
            beta: self.beta.clone(),
            beta_inv: self.beta_inv.clone(),
            generator: self.generator.clone(),
            elements,
        }
    }
}

fn conj_linear(beta: &UnitSeries, beta_inv: &UnitSeries, eps: &FieldElement) -> Result<UnitSeries> {
    let inner = beta_inv.scale(eps);
    UnitSeries::new(beta.compose(&inner)?)
}

impl TransitionGroup {
    /// `{β∘εz∘β^{-1} : ε ∈ U_n}` for a given unit `β`.
    pub fn from_beta(beta: &UnitSeries, beta_inv: &UnitSeries, order: usize) -> Result<TransitionGroup> {
        let field = beta.field();
        let eps = field.root_of_unity(order, 1)?;
        let generator = conj_linear(beta, beta_inv, &eps)?;
        Ok(TransitionGroup {
            order,
            beta: beta.clone(),
            beta_inv: beta_inv.clone(),
            generator,
            elements: OnceLock::new(),
        })
    }

    pub fn order(&self) -> usize {
        self.order
    }

    pub fn generator(&self) -> &UnitSeries {
        &self.generator
    }

    pub fn beta(&self) -> &UnitSeries {
        &self.beta
    }

    pub fn beta_inv(&self) -> &UnitSeries {
        &self.beta_inv
    }

    pub fn field(&self) -> &Field {
        self.beta.field()
    }

    /// `β∘ε^j z∘β^{-1}` with `ε` the canonical primitive root; element `1`
    /// is the generator.
    pub fn element(&self, j: usize) -> Result<UnitSeries> {
        let eps = self.field().root_of_unity(self.order, j % self.order)?;
        conj_linear(&self.beta, &self.beta_inv, &eps)
    }

    /// All `n` elements in index order, computed on first use.
    pub fn elements(&self) -> &[UnitSeries] {
        self.elements.get_or_init(|| {
            (0..self.order)
                .map(|j| self.element(j).expect("roots of unity checked at construction"))
                .collect()
        })
    }

    /// `β^{-1}∘g∘β` if it is linear, as the multiplier `ε`.
    fn linear_multiplier(&self, g: &TruncatedSeries) -> Option<FieldElement> {
        let c = self.beta_inv.compose(&g.compose(&self.beta).ok()?).ok()?;
        if c.ord() != Some(1) || c.support().len() != 1 {
            return None;
        }
        Some(c.coeff(1).clone())
    }

    /// Index `j` with `g ≡ β∘ε^j z∘β^{-1}`, if `g` lies in the group.
    pub fn index_of(&self, g: &TruncatedSeries) -> Option<usize> {
        let eps = self.linear_multiplier(g)?;
        (0..self.order).find(|&j| {
            self.field()
                .root_of_unity(self.order, j)
                .map(|r| r == eps)
                .unwrap_or(false)
        })
    }

    pub fn contains(&self, g: &TruncatedSeries) -> bool {
        self.index_of(g).is_some()
    }

    /// Whether the generators commute; by cyclicity this decides whether
    /// every pair of elements does.
    pub fn commutes_with(&self, other: &TransitionGroup) -> Result<bool> {
        let g = self.generator.compose(&other.generator)?;
        let h = other.generator.compose(&self.generator)?;
        Ok(g.equiv(&h))
    }
}

/// `G_A` from Böttcher data.
pub fn transition_group(d: &BoettcherData) -> Result<TransitionGroup> {
    let g = TransitionGroup::from_beta(d.beta(), d.beta_inv(), d.order())?;
    let a = d.series();
    if !a.compose(g.generator())?.equiv(a) {
        return Err(Error::VerificationFailed("generator does not fix A".into()));
    }
    Ok(g)
}

/// `G_{A^{∘l}} = {β∘εz∘β^{-1} : ε ∈ U_{nl}}`.
pub fn iterate_group(d: &BoettcherData, l: usize) -> Result<TransitionGroup> {
    TransitionGroup::from_beta(d.beta(), d.beta_inv(), d.order().pow(l as u32))
}

/// Convenience: `G_A` straight from the series.
pub fn group_of(a: &GammaSeries) -> Result<TransitionGroup> {
    transition_group(&boettcher(a)?)
}

/// Least `d ≤ bound` with `φ^{∘d} ≡ z` to the series' precision.
pub fn element_order(phi: &TruncatedSeries, bound: usize) -> Option<usize> {
    if phi.ord() != Some(1) {
        return None;
    }
    let mut p = phi.clone();
    for d in 1..=bound {
        if p.is_identity() {
            return Some(d);
        }
        p = p.compose(phi).ok()?;
    }
    None
}

/// `z·φ·φ^{∘2}·…·φ^{∘(d−1)}`, a series of order `d` fixed by `φ`.
pub fn series_from_transition(phi: &UnitSeries, d: usize) -> Result<GammaSeries> {
    if d < 2 || element_order(phi, d) != Some(d) {
        return Err(Error::OrderMismatch(format!(
            "transition function does not have compositional order {d}"
        )));
    }
    let mut acc = phi.shift(1);
    let mut p = phi.as_series().clone();
    for _ in 2..d {
        p = p.compose(phi)?;
        acc = acc.mul(&p);
    }
    GammaSeries::new(acc)
}

/// Whether `G ⊆ H`, decided on the generator of `G`.
pub fn subgroup_test(g: &TransitionGroup, h: &TransitionGroup) -> bool {
    g.order() <= h.order() && h.order() % g.order() == 0 && h.contains(g.generator())
}

/// `μ^{-1}∘G∘μ`, the transition group of `μ^{-1}∘A∘μ`.
pub fn conjugate_group(g: &TransitionGroup, mu: &UnitSeries) -> Result<TransitionGroup> {
    let mu_inv = mu.inverse();
    let beta = UnitSeries::new(mu_inv.compose(g.beta())?)?;
    let beta_inv = UnitSeries::new(g.beta_inv().compose(mu)?)?;
    TransitionGroup::from_beta(&beta, &beta_inv, g.order())
}

/// The `φ ∈ G_A` with `X₂ ≡ φ∘X₁`, provided `A∘X₁ ≡ A∘X₂`.
pub fn cancel_right(
    a: &GammaSeries,
    x1: &TruncatedSeries,
    x2: &TruncatedSeries,
) -> Result<Option<UnitSeries>> {
    if x1.val() < 1 || x2.val() < 1 {
        return Err(Error::CompositionUndefined);
    }
    if !a.compose(x1)?.equiv(&a.compose(x2)?) {
        return Ok(None);
    }
    let g = group_of(a)?;
    for phi in g.elements() {
        if phi.compose(x1)?.equiv(x2) {
            return Ok(Some(phi.clone()));
        }
    }
    Ok(None)
}
