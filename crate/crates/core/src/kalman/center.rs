use crate::algebra::{Elem, FiniteAlgebra, Table};

use super::{CDiffView, KalmanError};

/// `C(A) = {x ≥ c}` with `x ⊗_c y = (x ⊗ y) ∪ c`, bottom `c`, and the
/// remaining operations inherited.
#[derive(Clone, Debug)]
pub struct CenterAlgebra {
    algebra: FiniteAlgebra,
    embedding: Vec<Elem>,
    index: Vec<Option<Elem>>,
}

impl CenterAlgebra {
    pub fn algebra(&self) -> &FiniteAlgebra {
        &self.algebra
    }

    pub fn size(&self) -> usize {
        self.embedding.len()
    }

    /// Position in the parent of the `i`-th element.
    pub fn embed(&self, i: Elem) -> Elem {
        self.embedding[i]
    }

    pub fn embedding(&self) -> &[Elem] {
        &self.embedding
    }

    /// Index in `C` of a parent element, if it lies above `c`.
    pub fn index_of(&self, parent: Elem) -> Option<Elem> {
        self.index.get(parent).copied().flatten()
    }
}

/// Build `C(A)`. Fails if an inherited operation leaves `{x ≥ c}`.
pub fn build_c(view: &CDiffView) -> Result<CenterAlgebra, KalmanError> {
    let c = view.center;
    let embedding = view.above_center();
    let mut index = vec![None; view.size()];
    for (i, &x) in embedding.iter().enumerate() {
        index[x] = Some(i);
    }
    let m = embedding.len();
    let mut escaped: Option<Vec<Elem>> = None;
    let mut op = |f: &dyn Fn(Elem, Elem) -> Elem| {
        Table::from_fn(m, |p, q| {
            let v = f(embedding[p], embedding[q]);
            index[v].unwrap_or_else(|| {
                escaped.get_or_insert_with(|| vec![embedding[p], embedding[q], v]);
                0
            })
        })
    };
    let meet = op(&|x, y| view.cap(x, y));
    let join = op(&|x, y| view.cup(x, y));
    let times = op(&|x, y| view.cup(view.tensor(x, y), c));
    let imp = op(&|x, y| view.wand(x, y));
    if let Some(witness) = escaped {
        return Err(KalmanError::VerificationFailed {
            what: "closure of C(A)".into(),
            witness,
        });
    }
    let one = index[view.one()].ok_or(KalmanError::VerificationFailed {
        what: "top lies above c".into(),
        witness: vec![view.one()],
    })?;
    let algebra = FiniteAlgebra::from_parts(
        format!("C({})", view.algebra.name()),
        meet,
        join,
        times,
        imp,
        index[c].expect("c is above itself"),
        one,
    );
    Ok(CenterAlgebra {
        algebra,
        embedding,
        index,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::builtins as b;
    use crate::iso::find_isomorphism;
    use crate::kalman::build_k;

    #[test]
    fn center_of_kalman_recovers_base() {
        for l in [b::boolean2(), b::lukasiewicz(3), b::godel(4), b::boolean4()] {
            let k = build_k(&l).unwrap();
            let c = build_c(&k.view()).unwrap();
            assert!(c.algebra().validate_rl().is_pass());
            assert!(c.algebra().is_distributive());
            assert!(find_isomorphism(&l, c.algebra()).is_some(), "{}", l.name());
        }
    }

    #[test]
    fn boolean_center_carrier() {
        let k = build_k(&b::boolean2()).unwrap();
        let c = build_c(&k.view()).unwrap();
        let pairs: Vec<_> = c.embedding().iter().map(|&p| k.pair(p)).collect();
        assert_eq!(pairs, vec![(0, 0), (1, 0)]);
    }

    #[test]
    fn trivial_center() {
        let k = build_k(&b::trivial()).unwrap();
        assert_eq!(build_c(&k.view()).unwrap().size(), 1);
    }
}
