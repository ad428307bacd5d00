//! The free symmetric operad on a non-symmetric operad.
//!
//! Degreewise the construction is just `Q(n) x Sigma_n`, with the symmetric
//! group acting by right multiplication on its own factor. Composition is
//! the one formula compatible with that action: the outer permutation
//! reorders the arguments before their bases compose, and reappears as a
//! block permutation stacked on top of the argument permutations.

use std::fmt;

use crate::perm::Permutation;
use crate::view::{Operad, SymmetricOperad};
use crate::OperadError;

/// An element `(base, perm)` of the free symmetric operad over the operad
/// the base comes from; the two degrees always agree.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SymElem<B> {
    pub base: B,
    pub perm: Permutation,
}

impl<B> SymElem<B> {
    pub fn new(base: B, perm: Permutation) -> Self {
        SymElem { base, perm }
    }
}

impl<B: fmt::Display> fmt::Display for SymElem<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.base, self.perm)
    }
}

impl<B: fmt::Display> fmt::Debug for SymElem<B> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The free symmetric operad `L` over a non-symmetric base view.
#[derive(Clone, Copy, Debug, Default)]
pub struct FreeSymOperad<Q> {
    pub base: Q,
}

impl<Q: Operad> FreeSymOperad<Q> {
    pub fn new(base: Q) -> Self {
        FreeSymOperad { base }
    }

    /// Includes a base element with the identity permutation. This is how
    /// the underlying non-symmetric operad sits inside its free extension.
    pub fn include(&self, base: Q::Elem) -> SymElem<Q::Elem> {
        let n = self.base.degree(&base);
        SymElem::new(base, Permutation::identity(n))
    }

    /// Checked constructor: the permutation degree must match the base.
    pub fn elem(&self, base: Q::Elem, perm: Permutation) -> Result<SymElem<Q::Elem>, OperadError> {
        let n = self.base.degree(&base);
        if perm.degree() != n {
            return Err(OperadError::DegreeMismatch { left: n, right: perm.degree() });
        }
        Ok(SymElem::new(base, perm))
    }
}

impl<Q: Operad> Operad for FreeSymOperad<Q> {
    type Elem = SymElem<Q::Elem>;

    fn name(&self) -> String {
        format!("L{}", self.base.name())
    }

    fn identity(&self) -> Self::Elem {
        SymElem::new(self.base.identity(), Permutation::identity(1))
    }

    fn degree(&self, e: &Self::Elem) -> usize {
        self.base.degree(&e.base)
    }

    /// The composition forced by equivariance: writing the outer element as
    /// `(q, s)` and the arguments as `(r_i, t_i)` with degrees `k_i`,
    /// the base part composes `q` over the `s`-reordered `r_i`, and the
    /// permutation part is the block permutation `s<k_1,...,k_n>` (block
    /// sizes in the original argument order) composed with the direct sum
    /// of the `t_i`.
    fn gamma(&self, outer: &Self::Elem, args: &[Self::Elem]) -> Self::Elem {
        let sizes: Vec<usize> = args.iter().map(|a| self.degree(a)).collect();
        let reordered: Vec<Q::Elem> = outer
            .perm
            .apply_to_slice(args)
            .expect("arity checked by caller")
            .into_iter()
            .map(|a| a.base)
            .collect();
        let base = self.base.gamma(&outer.base, &reordered);
        let arg_perms: Vec<Permutation> = args.iter().map(|a| a.perm.clone()).collect();
        let perm = outer
            .perm
            .block(&sizes)
            .expect("sizes match outer degree")
            .compose(&Permutation::direct_sum(&arg_perms))
            .expect("degrees agree by construction");
        SymElem::new(base, perm)
    }

    fn measure(&self, e: &Self::Elem) -> usize {
        self.base.measure(&e.base)
    }

    fn elements_up_to(&self, bound: usize) -> Vec<Self::Elem> {
        self.base
            .elements_up_to(bound)
            .into_iter()
            .flat_map(|b| {
                let n = self.base.degree(&b);
                Permutation::all(n).into_iter().map(move |p| SymElem::new(b.clone(), p))
            })
            .collect()
    }
}

impl<Q: Operad> SymmetricOperad for FreeSymOperad<Q> {
    /// Right multiplication on the permutation factor.
    fn act(&self, e: &Self::Elem, p: &Permutation) -> Self::Elem {
        SymElem::new(e.base.clone(), e.perm.compose(p).expect("degrees match"))
    }
}

/// Extends a map defined on base elements to the whole free symmetric
/// operad: `(q, s)` goes to the image of `q` pushed across the action by
/// `s`. This is the counit of the free/forgetful adjunction in computable
/// form — the unique symmetric extension of the given non-symmetric map.
pub fn adjoint_lift<'a, B, W, F>(target: &'a W, h: F) -> impl Fn(&SymElem<B>) -> W::Elem + 'a
where
    W: SymmetricOperad,
    F: Fn(&B) -> W::Elem + 'a,
{
    move |e: &SymElem<B>| target.act(&h(&e.base), &e.perm)
}
