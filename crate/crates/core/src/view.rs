//! Uniform views of the concrete operads, so law suites, evaluators, and the
//! command line can run against any of them.
//!
//! A view bundles an element type with the operad structure on it. Views are
//! cheap value objects; the elements do the real work. Exhaustive checking
//! needs a finite slice of each operad, so every view also knows how to
//! enumerate its elements up to a size bound and how big each element is.

use std::fmt;
use std::hash::Hash;

use itertools::Itertools;

use crate::slots::Slotted;
use crate::tree::{TPoint, Tree, V0Tree};

/// A non-symmetric operad of sets, finitely enumerable by size.
pub trait Operad {
    type Elem: Clone + Eq + Hash + fmt::Debug + fmt::Display;

    /// Short name used in reports and error messages.
    fn name(&self) -> String;

    /// The identity in degree 1.
    fn identity(&self) -> Self::Elem;

    fn degree(&self, e: &Self::Elem) -> usize;

    /// Operad composition. Arities must match; views panic on violations,
    /// which the element-level `Result` APIs guard against at the edges.
    fn gamma(&self, outer: &Self::Elem, args: &[Self::Elem]) -> Self::Elem;

    /// The size used for enumeration bounds. Defaults to the degree; views
    /// whose degrees do not bound the element count (like the slotted
    /// operad) override it. Composition adds sizes over the slots:
    /// `measure(gamma(f, args)) = measure(f) - degree(f) + sum measure(args)`.
    fn measure(&self, e: &Self::Elem) -> usize {
        self.degree(e)
    }

    /// All elements of measure at most `bound`, in a deterministic order.
    fn elements_up_to(&self, bound: usize) -> Vec<Self::Elem>;
}

/// An operad with right symmetric-group actions on each degree.
pub trait SymmetricOperad: Operad {
    /// The right action of a permutation of matching degree.
    fn act(&self, e: &Self::Elem, p: &crate::perm::Permutation) -> Self::Elem;
}

/// The operad of complete parenthesizations.
#[derive(Clone, Copy, Debug, Default)]
pub struct VOperad;

impl Operad for VOperad {
    type Elem = Tree;

    fn name(&self) -> String {
        "V".to_string()
    }

    fn identity(&self) -> Tree {
        Tree::Leaf
    }

    fn degree(&self, e: &Tree) -> usize {
        e.degree()
    }

    fn gamma(&self, outer: &Tree, args: &[Tree]) -> Tree {
        outer.gamma(args).expect("arity checked by caller")
    }

    fn elements_up_to(&self, bound: usize) -> Vec<Tree> {
        (1..=bound).flat_map(Tree::enumerate).collect()
    }
}

/// The zero-extended operad of parenthesizations.
#[derive(Clone, Copy, Debug, Default)]
pub struct V0Operad;

impl Operad for V0Operad {
    type Elem = V0Tree;

    fn name(&self) -> String {
        "V0".to_string()
    }

    fn identity(&self) -> V0Tree {
        V0Tree::Tree(Tree::Leaf)
    }

    fn degree(&self, e: &V0Tree) -> usize {
        e.degree()
    }

    fn gamma(&self, outer: &V0Tree, args: &[V0Tree]) -> V0Tree {
        outer.gamma(args).expect("arity checked by caller")
    }

    fn elements_up_to(&self, bound: usize) -> Vec<V0Tree> {
        (0..=bound).flat_map(V0Tree::enumerate).collect()
    }
}

/// The terminal operad: one point in every degree.
#[derive(Clone, Copy, Debug, Default)]
pub struct TOperad;

impl Operad for TOperad {
    type Elem = TPoint;

    fn name(&self) -> String {
        "T".to_string()
    }

    fn identity(&self) -> TPoint {
        TPoint(1)
    }

    fn degree(&self, e: &TPoint) -> usize {
        e.degree()
    }

    fn gamma(&self, outer: &TPoint, args: &[TPoint]) -> TPoint {
        outer.gamma(args).expect("arity checked by caller")
    }

    fn elements_up_to(&self, bound: usize) -> Vec<TPoint> {
        (0..=bound).map(TPoint).collect()
    }
}

/// The operad of slotted parenthesizations. Elements are sized by internal
/// degree, the measure that composition is inductive over; the plain operad
/// degree never bounds how many elements there are.
#[derive(Clone, Copy, Debug, Default)]
pub struct ZOperad;

impl Operad for ZOperad {
    type Elem = Slotted;

    fn name(&self) -> String {
        "Z".to_string()
    }

    fn identity(&self) -> Slotted {
        Slotted::identity()
    }

    fn degree(&self, e: &Slotted) -> usize {
        e.degree()
    }

    fn gamma(&self, outer: &Slotted, args: &[Slotted]) -> Slotted {
        outer.gamma(args).expect("arity checked by caller")
    }

    fn measure(&self, e: &Slotted) -> usize {
        e.internal_degree()
    }

    fn elements_up_to(&self, bound: usize) -> Vec<Slotted> {
        let mut out = Vec::new();
        for j in 1..=bound {
            for tree in Tree::enumerate(j) {
                for n in 0..=j {
                    for slots in (1..=j).combinations(n) {
                        out.push(Slotted::new(tree.clone(), slots).expect("slots are valid"));
                    }
                }
            }
        }
        out
    }
}
