//! Endomorphism operads of finite sets.
//!
//! Degree `n` of `End(X)` is the set of all functions from n-tuples over `X`
//! to `X`, stored as explicit lookup tables so that every claim about them
//! is a finite table comparison. Composition is substitution of functions,
//! and the symmetric groups act by permuting the inputs. These operads are
//! where abstract operad elements become executable operations, via the
//! evaluators in [`crate::tree`] and [`crate::slots`].

use std::fmt;

use itertools::Itertools;

use crate::perm::Permutation;
use crate::view::{Operad, SymmetricOperad};
use crate::OperadError;

/// A total function from `arity`-tuples over `{0, .., size-1}` to the same
/// carrier, tabulated with the first input varying fastest: the tuple
/// `(x_1, ..., x_n)` lives at index `x_1 + x_2*size + x_3*size^2 + ...`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct EndFn {
    size: usize,
    arity: usize,
    table: Vec<usize>,
}

impl EndFn {
    pub fn new(size: usize, arity: usize, table: Vec<usize>) -> Result<Self, OperadError> {
        if size == 0 {
            return Err(OperadError::InvalidTable("carrier must be nonempty".into()));
        }
        let expected = size.pow(arity as u32);
        if table.len() != expected {
            return Err(OperadError::InvalidTable(format!(
                "table has {} entries, arity {} over {} values needs {}",
                table.len(),
                arity,
                size,
                expected
            )));
        }
        if let Some(bad) = table.iter().find(|&&v| v >= size) {
            return Err(OperadError::InvalidTable(format!("entry {bad} outside carrier")));
        }
        Ok(EndFn { size, arity, table })
    }

    /// Tabulates a closure over all input tuples.
    pub fn from_fn(size: usize, arity: usize, f: impl Fn(&[usize]) -> usize) -> Self {
        let table = tuples(size, arity).map(|t| f(&t)).collect();
        EndFn::new(size, arity, table).expect("closure output checked by new")
    }

    /// The nullary function picking out `value`.
    pub fn constant(size: usize, value: usize) -> Result<Self, OperadError> {
        EndFn::new(size, 0, vec![value])
    }

    /// The function returning its input at `pos` (zero-based).
    pub fn projection(size: usize, arity: usize, pos: usize) -> Self {
        assert!(pos < arity, "projection index out of range");
        EndFn::from_fn(size, arity, |t| t[pos])
    }

    pub fn carrier_size(&self) -> usize {
        self.size
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn table(&self) -> &[usize] {
        &self.table
    }

    pub fn eval(&self, inputs: &[usize]) -> usize {
        debug_assert_eq!(inputs.len(), self.arity);
        debug_assert!(inputs.iter().all(|&x| x < self.size));
        let mut index = 0;
        for &x in inputs.iter().rev() {
            index = index * self.size + x;
        }
        self.table[index]
    }

    /// Substitution: feeds the outputs of `args` (on consecutive blocks of
    /// the combined input) into `self`.
    pub fn gamma(&self, args: &[EndFn]) -> Result<EndFn, OperadError> {
        if args.len() != self.arity {
            return Err(OperadError::ArityMismatch { expected: self.arity, found: args.len() });
        }
        if let Some(bad) = args.iter().find(|a| a.size != self.size) {
            return Err(OperadError::InvalidTable(format!(
                "carrier sizes differ: {} vs {}",
                self.size, bad.size
            )));
        }
        let total: usize = args.iter().map(|a| a.arity).sum();
        let size = self.size;
        Ok(EndFn::from_fn(size, total, |combined| {
            let mut vals = Vec::with_capacity(self.arity);
            let mut offset = 0;
            for arg in args {
                vals.push(arg.eval(&combined[offset..offset + arg.arity]));
                offset += arg.arity;
            }
            self.eval(&vals)
        }))
    }

    /// The right action by input permutation:
    /// `(f.act(s))(x_1, ..., x_n) = f(x_{s⁻¹(1)}, ..., x_{s⁻¹(n)})`.
    pub fn act(&self, p: &Permutation) -> Result<EndFn, OperadError> {
        if p.degree() != self.arity {
            return Err(OperadError::DegreeMismatch { left: self.arity, right: p.degree() });
        }
        Ok(EndFn::from_fn(self.size, self.arity, |t| {
            self.eval(&p.apply_to_slice(t).expect("degree checked"))
        }))
    }

    /// All functions of the given arity, ordered lexicographically by table.
    pub fn enumerate(size: usize, arity: usize) -> Vec<EndFn> {
        let len = size.pow(arity as u32);
        let count = size.checked_pow(len as u32).filter(|&c| c <= 1 << 20);
        assert!(
            count.is_some(),
            "refusing to enumerate {size}^({size}^{arity}) functions; keep arity small"
        );
        (0..len)
            .map(|_| 0..size)
            .multi_cartesian_product()
            .map(|table| EndFn { size, arity, table })
            .collect()
    }
}

/// All `arity`-tuples over the carrier, first position varying fastest to
/// match the table indexing.
fn tuples(size: usize, arity: usize) -> impl Iterator<Item = Vec<usize>> {
    let len = size.pow(arity as u32);
    (0..len).map(move |mut index| {
        (0..arity)
            .map(|_| {
                let digit = index % size;
                index /= size;
                digit
            })
            .collect()
    })
}

impl fmt::Display for EndFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}^{}:{}", self.size, self.arity, self.table.iter().join(""))
    }
}

impl fmt::Debug for EndFn {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The endomorphism operad of a finite carrier `{0, .., size-1}`.
#[derive(Clone, Copy, Debug)]
pub struct EndOperad {
    size: usize,
}

impl EndOperad {
    pub fn new(size: usize) -> Self {
        assert!(size >= 1, "carrier must be nonempty");
        EndOperad { size }
    }

    pub fn carrier_size(&self) -> usize {
        self.size
    }
}

impl Operad for EndOperad {
    type Elem = EndFn;

    fn name(&self) -> String {
        format!("End{}", self.size)
    }

    fn identity(&self) -> EndFn {
        EndFn::projection(self.size, 1, 0)
    }

    fn degree(&self, e: &EndFn) -> usize {
        e.arity()
    }

    fn gamma(&self, outer: &EndFn, args: &[EndFn]) -> EndFn {
        outer.gamma(args).expect("arity checked by caller")
    }

    fn elements_up_to(&self, bound: usize) -> Vec<EndFn> {
        (0..=bound).flat_map(|n| EndFn::enumerate(self.size, n)).collect()
    }
}

impl SymmetricOperad for EndOperad {
    fn act(&self, e: &EndFn, p: &Permutation) -> EndFn {
        e.act(p).expect("degree checked by caller")
    }
}
