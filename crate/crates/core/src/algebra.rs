//! Finite algebras of FLe type, stored as operation tables over `0..n`.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::report::AxiomReport;

/// An element of a finite algebra, i.e. an index into its carrier.
pub type Elem = usize;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("algebra must have at least one element")]
    EmptyCarrier,
    #[error("malformed table `{table}` at row {row}, column {column}: {reason}")]
    MalformedTable {
        table: &'static str,
        row: usize,
        column: usize,
        reason: String,
    },
    #[error("constant `{name}` = {value} is out of range for size {size}")]
    ConstantOutOfRange {
        name: &'static str,
        value: usize,
        size: usize,
    },
    #[error("residual {x} -> {y} is undefined: {{z : z*{x} <= {y}}} has no maximum")]
    ResiduationUndefined { x: Elem, y: Elem },
    #[error("order is not a lattice: {x} and {y} have no {which}")]
    NotALattice {
        x: Elem,
        y: Elem,
        which: &'static str,
    },
    #[error("partition is not compatible with `{operation}` at {witness:?}")]
    IncompatiblePartition {
        operation: &'static str,
        witness: Vec<Elem>,
    },
    #[error("partition does not cover the carrier 0..{size}")]
    InvalidPartition { size: usize },
}

/// A square operation table, row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Table {
    size: usize,
    cells: Vec<Elem>,
}

impl Table {
    pub fn from_fn(size: usize, mut f: impl FnMut(Elem, Elem) -> Elem) -> Self {
        let mut cells = Vec::with_capacity(size * size);
        for x in 0..size {
            for y in 0..size {
                cells.push(f(x, y));
            }
        }
        Table { size, cells }
    }

    /// Build from nested rows, checking shape and range.
    pub fn from_rows(
        name: &'static str,
        size: usize,
        rows: &[Vec<usize>],
    ) -> Result<Self, AlgebraError> {
        if rows.len() != size {
            return Err(AlgebraError::MalformedTable {
                table: name,
                row: rows.len().min(size),
                column: 0,
                reason: format!("expected {size} rows, found {}", rows.len()),
            });
        }
        let mut cells = Vec::with_capacity(size * size);
        for (r, row) in rows.iter().enumerate() {
            if row.len() != size {
                return Err(AlgebraError::MalformedTable {
                    table: name,
                    row: r,
                    column: row.len().min(size),
                    reason: format!("expected {size} columns, found {}", row.len()),
                });
            }
            for (c, &v) in row.iter().enumerate() {
                if v >= size {
                    return Err(AlgebraError::MalformedTable {
                        table: name,
                        row: r,
                        column: c,
                        reason: format!("entry {v} is not an element index below {size}"),
                    });
                }
                cells.push(v);
            }
        }
        Ok(Table { size, cells })
    }

    #[inline]
    pub fn get(&self, x: Elem, y: Elem) -> Elem {
        self.cells[x * self.size + y]
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn cells(&self) -> &[Elem] {
        &self.cells
    }

    pub fn rows(&self) -> Vec<Vec<usize>> {
        self.cells
            .chunks(self.size.max(1))
            .map(<[_]>::to_vec)
            .collect()
    }
}

/// Raw tables as they appear in input files.
#[derive(Clone, Debug, Default)]
pub struct RawTables {
    pub size: usize,
    pub meet: Vec<Vec<usize>>,
    pub join: Vec<Vec<usize>>,
    pub times: Vec<Vec<usize>>,
    pub imp: Option<Vec<Vec<usize>>>,
    pub zero: usize,
    pub one: usize,
}

/// A finite algebra `(A, ∧, ∨, ⊙, →, 0, 1)`.
///
/// The tables are guaranteed index-valid. Whether they satisfy the FLe
/// axioms is a separate question answered by [`FiniteAlgebra::validate`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiniteAlgebra {
    name: String,
    meet: Table,
    join: Table,
    times: Table,
    imp: Table,
    zero: Elem,
    one: Elem,
}

impl FiniteAlgebra {
    /// Assemble an algebra from raw tables. When `imp` is absent it is
    /// derived as `x → y = max {z : z ⊙ x ≤ y}`.
    pub fn from_tables(name: impl Into<String>, raw: &RawTables) -> Result<Self, AlgebraError> {
        let n = raw.size;
        if n == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let meet = Table::from_rows("meet", n, &raw.meet)?;
        let join = Table::from_rows("join", n, &raw.join)?;
        let times = Table::from_rows("times", n, &raw.times)?;
        if raw.zero >= n {
            return Err(AlgebraError::ConstantOutOfRange {
                name: "zero",
                value: raw.zero,
                size: n,
            });
        }
        if raw.one >= n {
            return Err(AlgebraError::ConstantOutOfRange {
                name: "one",
                value: raw.one,
                size: n,
            });
        }
        let imp = match &raw.imp {
            Some(rows) => Table::from_rows("imp", n, rows)?,
            None => derive_residual(n, |x, y| meet.get(x, y) == x, |x, y| times.get(x, y))?,
        };
        Ok(FiniteAlgebra {
            name: name.into(),
            meet,
            join,
            times,
            imp,
            zero: raw.zero,
            one: raw.one,
        })
    }

    /// Build from a partial order and a product. Meet and join are the
    /// order-theoretic bounds; the residual is derived.
    pub fn from_order(
        name: impl Into<String>,
        size: usize,
        leq: impl Fn(Elem, Elem) -> bool,
        times: impl Fn(Elem, Elem) -> Elem,
        zero: Elem,
        one: Elem,
    ) -> Result<Self, AlgebraError> {
        if size == 0 {
            return Err(AlgebraError::EmptyCarrier);
        }
        let (meet, join) = lattice_tables(size, &leq)?;
        let times = Table::from_fn(size, times);
        if let Some(bad) = times.cells.iter().position(|&v| v >= size) {
            return Err(AlgebraError::MalformedTable {
                table: "times",
                row: bad / size,
                column: bad % size,
                reason: format!("entry {} out of range", times.cells[bad]),
            });
        }
        let imp = derive_residual(size, &leq, |x, y| times.get(x, y))?;
        Ok(FiniteAlgebra {
            name: name.into(),
            meet,
            join,
            times,
            imp,
            zero,
            one,
        })
    }

    /// A chain `0 < 1 < … < n-1` with the given product; bottom is the
    /// constant 0 and top the constant 1.
    pub fn chain(
        name: impl Into<String>,
        size: usize,
        times: impl Fn(Elem, Elem) -> Elem,
    ) -> Result<Self, AlgebraError> {
        let top = size.saturating_sub(1);
        Self::from_order(name, size, |x, y| x <= y, times, 0, top)
    }

    /// Replace all tables at once; used by constructions that already
    /// computed every operation.
    pub(crate) fn from_parts(
        name: String,
        meet: Table,
        join: Table,
        times: Table,
        imp: Table,
        zero: Elem,
        one: Elem,
    ) -> Self {
        FiniteAlgebra {
            name,
            meet,
            join,
            times,
            imp,
            zero,
            one,
        }
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn size(&self) -> usize {
        self.meet.size
    }

    pub fn elements(&self) -> std::ops::Range<Elem> {
        0..self.size()
    }

    #[inline]
    pub fn meet(&self, x: Elem, y: Elem) -> Elem {
        self.meet.get(x, y)
    }

    #[inline]
    pub fn join(&self, x: Elem, y: Elem) -> Elem {
        self.join.get(x, y)
    }

    #[inline]
    pub fn times(&self, x: Elem, y: Elem) -> Elem {
        self.times.get(x, y)
    }

    #[inline]
    pub fn imp(&self, x: Elem, y: Elem) -> Elem {
        self.imp.get(x, y)
    }

    /// `-x = x → 0`
    #[inline]
    pub fn neg(&self, x: Elem) -> Elem {
        self.imp(x, self.zero)
    }

    pub fn zero(&self) -> Elem {
        self.zero
    }

    pub fn one(&self) -> Elem {
        self.one
    }

    /// The lattice order, read off the meet table.
    #[inline]
    pub fn leq(&self, x: Elem, y: Elem) -> bool {
        self.meet(x, y) == x
    }

    pub fn meet_table(&self) -> &Table {
        &self.meet
    }

    pub fn join_table(&self) -> &Table {
        &self.join
    }

    pub fn times_table(&self) -> &Table {
        &self.times
    }

    pub fn imp_table(&self) -> &Table {
        &self.imp
    }

    /// Bottom and top of the lattice order, if they exist.
    pub fn bottom(&self) -> Option<Elem> {
        self.elements()
            .find(|&b| self.elements().all(|x| self.leq(b, x)))
    }

    pub fn top(&self) -> Option<Elem> {
        self.elements()
            .find(|&t| self.elements().all(|x| self.leq(x, t)))
    }

    /// Relabel the carrier: old element `x` becomes `perm[x]`.
    pub fn permuted(&self, perm: &[Elem]) -> FiniteAlgebra {
        let n = self.size();
        assert_eq!(perm.len(), n, "permutation length");
        let mut inv = vec![0; n];
        for (x, &p) in perm.iter().enumerate() {
            inv[p] = x;
        }
        let relabel = |t: &Table| Table::from_fn(n, |a, b| perm[t.get(inv[a], inv[b])]);
        FiniteAlgebra {
            name: self.name.clone(),
            meet: relabel(&self.meet),
            join: relabel(&self.join),
            times: relabel(&self.times),
            imp: relabel(&self.imp),
            zero: perm[self.zero],
            one: perm[self.one],
        }
    }

    /// Direct product; the pair `(a, b)` has index `a * |other| + b`.
    pub fn product(&self, other: &FiniteAlgebra) -> FiniteAlgebra {
        let m = other.size();
        let n = self.size() * m;
        let op = |f: &dyn Fn(&FiniteAlgebra, Elem, Elem) -> Elem| {
            Table::from_fn(n, |p, q| f(self, p / m, q / m) * m + f(other, p % m, q % m))
        };
        FiniteAlgebra {
            name: format!("{}x{}", self.name, other.name),
            meet: op(&|a, x, y| a.meet(x, y)),
            join: op(&|a, x, y| a.join(x, y)),
            times: op(&|a, x, y| a.times(x, y)),
            imp: op(&|a, x, y| a.imp(x, y)),
            zero: self.zero * m + other.zero,
            one: self.one * m + other.one,
        }
    }

    /// Check the FLe axioms: lattice laws, commutative monoid with unit
    /// `one`, and residuation.
    pub fn validate(&self) -> AxiomReport {
        let n = self.size();
        let mut r = AxiomReport::new();
        r.forall1("meet idempotent", n, |x| self.meet(x, x) == x);
        r.forall1("join idempotent", n, |x| self.join(x, x) == x);
        r.forall2("meet commutative", n, |x, y| {
            self.meet(x, y) == self.meet(y, x)
        });
        r.forall2("join commutative", n, |x, y| {
            self.join(x, y) == self.join(y, x)
        });
        r.forall3("meet associative", n, |x, y, z| {
            self.meet(self.meet(x, y), z) == self.meet(x, self.meet(y, z))
        });
        r.forall3("join associative", n, |x, y, z| {
            self.join(self.join(x, y), z) == self.join(x, self.join(y, z))
        });
        r.forall2("absorption meet-join", n, |x, y| {
            self.meet(x, self.join(x, y)) == x
        });
        r.forall2("absorption join-meet", n, |x, y| {
            self.join(x, self.meet(x, y)) == x
        });
        r.forall1("unit law", n, |x| self.times(x, self.one) == x);
        r.forall2("times commutative", n, |x, y| {
            self.times(x, y) == self.times(y, x)
        });
        r.forall3("times associative", n, |x, y, z| {
            self.times(self.times(x, y), z) == self.times(x, self.times(y, z))
        });
        r.forall3("residuation", n, |x, y, z| {
            self.leq(self.times(x, y), z) == self.leq(x, self.imp(y, z))
        });
        r
    }

    /// [`validate`](Self::validate) plus integrality (`x ≤ 1`) and
    /// `0 ≤ x`: the residuated-lattice (FLew) axioms.
    pub fn validate_rl(&self) -> AxiomReport {
        let mut r = self.validate();
        let n = self.size();
        r.forall1("integrality", n, |x| self.leq(x, self.one));
        r.forall1("zero bound", n, |x| self.leq(self.zero, x));
        r
    }

    pub fn is_integral(&self) -> bool {
        self.elements().all(|x| self.leq(x, self.one))
    }

    pub fn is_zero_bounded(&self) -> bool {
        self.elements().all(|x| self.leq(self.zero, x))
    }

    /// Integral and zero-bounded: the precondition of everything monadic.
    pub fn is_residuated_lattice_shape(&self) -> bool {
        self.is_integral() && self.is_zero_bounded()
    }

    pub fn is_distributive(&self) -> bool {
        let n = self.size();
        (0..n).all(|x| {
            (0..n).all(|y| {
                (0..n).all(|z| {
                    self.meet(x, self.join(y, z)) == self.join(self.meet(x, y), self.meet(x, z))
                })
            })
        })
    }

    pub fn is_involutive(&self) -> bool {
        self.elements().all(|x| self.neg(self.neg(x)) == x)
    }

    pub fn is_prelinear(&self) -> bool {
        self.elements().all(|x| {
            self.elements()
                .all(|y| self.join(self.imp(x, y), self.imp(y, x)) == self.one)
        })
    }

    pub fn is_divisible(&self) -> bool {
        self.elements().all(|x| {
            self.elements()
                .all(|y| self.meet(x, y) == self.times(x, self.imp(x, y)))
        })
    }

    /// Evaluate every equational class flag by exhaustive checking.
    pub fn classify(&self) -> ClassificationFlags {
        let is_integral = self.is_integral();
        let is_zero_bounded = self.is_zero_bounded();
        let is_distributive = self.is_distributive();
        let is_involutive = self.is_involutive();
        let is_prelinear = self.is_prelinear();
        let is_divisible = self.is_divisible();
        let base = is_integral && is_zero_bounded;
        ClassificationFlags {
            is_integral,
            is_zero_bounded,
            is_distributive,
            is_involutive,
            is_prelinear,
            is_divisible,
            is_mv: base && is_involutive && is_divisible && is_prelinear,
            is_rdl: base && is_distributive,
        }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ClassificationFlags {
    pub is_integral: bool,
    pub is_zero_bounded: bool,
    pub is_distributive: bool,
    pub is_involutive: bool,
    pub is_prelinear: bool,
    pub is_divisible: bool,
    pub is_mv: bool,
    pub is_rdl: bool,
}

/// Meet and join tables from an order relation.
pub(crate) fn lattice_tables(
    n: usize,
    leq: &impl Fn(Elem, Elem) -> bool,
) -> Result<(Table, Table), AlgebraError> {
    let mut meet = vec![0; n * n];
    let mut join = vec![0; n * n];
    for x in 0..n {
        for y in 0..n {
            let lower: Vec<Elem> = (0..n).filter(|&z| leq(z, x) && leq(z, y)).collect();
            meet[x * n + y] = *lower
                .iter()
                .find(|&&m| lower.iter().all(|&z| leq(z, m)))
                .ok_or(AlgebraError::NotALattice {
                    x,
                    y,
                    which: "meet",
                })?;
            let upper: Vec<Elem> = (0..n).filter(|&z| leq(x, z) && leq(y, z)).collect();
            join[x * n + y] = *upper
                .iter()
                .find(|&&j| upper.iter().all(|&z| leq(j, z)))
                .ok_or(AlgebraError::NotALattice {
                    x,
                    y,
                    which: "join",
                })?;
        }
    }
    Ok((
        Table {
            size: n,
            cells: meet,
        },
        Table {
            size: n,
            cells: join,
        },
    ))
}

/// `x → y := max {z : z ⊙ x ≤ y}`, failing when the maximum does not exist.
pub(crate) fn derive_residual(
    n: usize,
    leq: impl Fn(Elem, Elem) -> bool,
    times: impl Fn(Elem, Elem) -> Elem,
) -> Result<Table, AlgebraError> {
    let mut cells = Vec::with_capacity(n * n);
    for x in 0..n {
        for y in 0..n {
            let candidates: Vec<Elem> = (0..n).filter(|&z| leq(times(z, x), y)).collect();
            let max = candidates
                .iter()
                .copied()
                .find(|&m| candidates.iter().all(|&z| leq(z, m)))
                .ok_or(AlgebraError::ResiduationUndefined { x, y })?;
            cells.push(max);
        }
    }
    Ok(Table { size: n, cells })
}
