//! The Kalman construction `K(L)`, c-differential views, center algebras
//! `C(A)` and the maps relating them.

mod center;
mod equivalence;
mod view;

use serde::Serialize;
use thiserror::Error;

use crate::algebra::{Elem, FiniteAlgebra, Table};
use crate::report::AxiomReport;

pub use center::{build_c, CenterAlgebra};
pub use equivalence::{
    box_k, box_neg, check_box_k_laws, enumerate_center_quantifiers, phi, psi, recover_on_base,
    recover_quantifiers, round_trip, PhiMap, PsiMap,
};
pub use view::{
    check_ck, check_mv_bullet, ck_agreement, kappa_search, validate_cdiff,
    validate_center_quantifier, CDiffView, CkAgreement, KappaOutcome,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum KalmanError {
    #[error("base is not a residuated lattice: {report}")]
    NotResiduatedLattice { report: AxiomReport },
    #[error("quantifier pair is not monadic: {report}")]
    QuantifierInvalid { report: AxiomReport },
    #[error("verification of {what} failed at {witness:?}")]
    VerificationFailed { what: String, witness: Vec<Elem> },
    #[error("map has length {found}, expected {expected}")]
    LengthMismatch { expected: usize, found: usize },
}

/// `K(L) = {(x, y) : x ⊙ y = 0}` with its c-differential structure.
///
/// Elements are the admissible pairs in lexicographic order of base
/// indices; every table is over positions in that order.
#[derive(Clone, Debug)]
pub struct KalmanAlgebra {
    base: FiniteAlgebra,
    pairs: Vec<(Elem, Elem)>,
    position: Vec<Option<Elem>>,
    algebra: FiniteAlgebra,
    inv: Vec<Elem>,
    center: Elem,
    distributive_base: bool,
}

/// Build `K(L)`. The base must be a residuated lattice; a non-distributive
/// base is accepted and flagged.
pub fn build_k(base: &FiniteAlgebra) -> Result<KalmanAlgebra, KalmanError> {
    let report = base.validate_rl();
    if !report.is_pass() {
        return Err(KalmanError::NotResiduatedLattice { report });
    }
    let n = base.size();
    let zero = base.zero();
    let one = base.one();
    let mut pairs = Vec::new();
    let mut position = vec![None; n * n];
    for x in 0..n {
        for y in 0..n {
            if base.times(x, y) == zero {
                position[x * n + y] = Some(pairs.len());
                pairs.push((x, y));
            }
        }
    }
    let m = pairs.len();
    let pos =
        |(x, y): (Elem, Elem)| position[x * n + y].expect("K(L) is closed under its operations");
    let op = |f: &dyn Fn((Elem, Elem), (Elem, Elem)) -> (Elem, Elem)| {
        Table::from_fn(m, |p, q| pos(f(pairs[p], pairs[q])))
    };
    let l = base;
    let cup = op(&|(x, y), (z, w)| (l.join(x, z), l.meet(y, w)));
    let cap = op(&|(x, y), (z, w)| (l.meet(x, z), l.join(y, w)));
    let tensor = op(&|(x, y), (z, w)| (l.times(x, z), l.meet(l.imp(x, w), l.imp(z, y))));
    let wand = op(&|(x, y), (z, w)| (l.meet(l.imp(x, z), l.imp(w, y)), l.times(w, x)));
    let inv = pairs.iter().map(|&(x, y)| pos((y, x))).collect();
    let center = pos((zero, zero));
    let algebra = FiniteAlgebra::from_parts(
        format!("K({})", base.name()),
        cap,
        cup,
        tensor,
        wand,
        pos((zero, one)),
        pos((one, zero)),
    );
    Ok(KalmanAlgebra {
        base: base.clone(),
        pairs,
        position,
        algebra,
        inv,
        center,
        distributive_base: base.is_distributive(),
    })
}

impl KalmanAlgebra {
    pub fn base(&self) -> &FiniteAlgebra {
        &self.base
    }

    /// The algebra `(K(L), ∩, ∪, ⊗, ⇝, (0,1), (1,0))`.
    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn size(&self) -> usize {
        self.pairs.len()
    }

    pub fn pairs(&self) -> &[(Elem, Elem)] {
        &self.pairs
    }

    pub fn pair(&self, p: Elem) -> (Elem, Elem) {
        self.pairs[p]
    }

    /// Position of `(x, y)`, if `x ⊙ y = 0`.
    pub fn position(&self, x: Elem, y: Elem) -> Option<Elem> {
        let n = self.base.size();
        if x >= n || y >= n {
            return None;
        }
        self.position[x * n + y]
    }

    pub fn inv(&self) -> &[Elem] {
        &self.inv
    }

    pub fn center(&self) -> Elem {
        self.center
    }

    pub fn top(&self) -> Elem {
        self.algebra.one()
    }

    pub fn bottom(&self) -> Elem {
        self.algebra.zero()
    }

    /// False when the base lattice is not distributive; the equivalence
    /// results are only claimed for distributive bases.
    pub fn is_base_distributive(&self) -> bool {
        self.distributive_base
    }

    pub fn view(&self) -> CDiffView {
        CDiffView::new(self.algebra.clone(), self.inv.clone(), self.center)
    }
}

/// Pairs `(x, y)` of a base with `x ⊙ y = 0`, as a serializable listing.
#[derive(Clone, Debug, Serialize)]
pub struct KalmanListing {
    pub base: String,
    pub size: usize,
    pub elements: Vec<(Elem, Elem)>,
    pub center: Elem,
    pub distributive_base: bool,
}

impl From<&KalmanAlgebra> for KalmanListing {
    fn from(k: &KalmanAlgebra) -> Self {
        KalmanListing {
            base: k.base.name().to_string(),
            size: k.size(),
            elements: k.pairs.clone(),
            center: k.center,
            distributive_base: k.distributive_base,
        }
    }
}
