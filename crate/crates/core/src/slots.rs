//! Parenthesizations with a chosen subset of variable slots.
//!
//! A [`Slotted`] is a pair of a full binary tree with `j` leaves (`j` is the
//! *internal* degree) and a subset of those leaves marked as variable slots;
//! the number of slots is the operad degree. Unmarked leaves are places where
//! a nullary operation has been plugged in. These form a non-symmetric
//! operad, freely generated by the empty-slot leaf `[1;{}]` in degree 0 and
//! the fully slotted pairing `[(1,1);{1,2}]` in degree 2; [`SlotEvaluator`]
//! computes the resulting universal maps.

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::parse::{ParseError, Scanner};
use crate::tree::{parse_tree, Tree, V0Tree};
use crate::view::Operad;
use crate::OperadError;

/// A parenthesization with selected variable slots, written `[tree;{1,3}]`;
/// slot indices are one-based leaf positions, kept strictly increasing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Slotted {
    tree: Tree,
    slots: Vec<usize>,
}

impl Slotted {
    pub fn new(tree: Tree, slots: Vec<usize>) -> Result<Self, OperadError> {
        let leaves = tree.degree();
        let increasing = slots.windows(2).all(|w| w[0] < w[1]);
        let in_range = slots.iter().all(|&s| s >= 1 && s <= leaves);
        if !increasing || !in_range {
            return Err(OperadError::InvalidSlots { slots, leaves });
        }
        Ok(Slotted { tree, slots })
    }

    /// The operad identity `[1;{1}]`.
    pub fn identity() -> Self {
        Slotted { tree: Tree::Leaf, slots: vec![1] }
    }

    /// The degree-0 generator `[1;{}]`: a leaf with its slot closed off.
    pub fn nullary_generator() -> Self {
        Slotted { tree: Tree::Leaf, slots: Vec::new() }
    }

    /// The degree-2 generator `[(1,1);{1,2}]`.
    pub fn binary_generator() -> Self {
        Slotted { tree: Tree::pair(), slots: vec![1, 2] }
    }

    /// Embeds a plain parenthesization with every leaf kept as a slot.
    ///
    /// This is a map of operads sending the pairing generator to the slotted
    /// pairing generator.
    pub fn from_tree(tree: &Tree) -> Self {
        let slots = (1..=tree.degree()).collect();
        Slotted { tree: tree.clone(), slots }
    }

    pub fn tree(&self) -> &Tree {
        &self.tree
    }

    pub fn slots(&self) -> &[usize] {
        &self.slots
    }

    /// Operad degree: the number of slots.
    pub fn degree(&self) -> usize {
        self.slots.len()
    }

    /// Internal degree: the number of leaves of the underlying tree.
    pub fn internal_degree(&self) -> usize {
        self.tree.degree()
    }

    /// Splits a composite element into the two factors it is the dot of.
    ///
    /// Slots landing in the right factor are shifted down past the left
    /// factor's leaves, so each factor is itself well-formed. Returns `None`
    /// on a leaf tree, which has no such splitting.
    pub fn decompose(&self) -> Option<(Slotted, Slotted)> {
        let (l, r) = self.tree.children()?;
        let k = l.degree();
        let left_slots: Vec<usize> = self.slots.iter().copied().filter(|&s| s <= k).collect();
        let right_slots: Vec<usize> =
            self.slots.iter().copied().filter(|&s| s > k).map(|s| s - k).collect();
        Some((
            Slotted { tree: l.clone(), slots: left_slots },
            Slotted { tree: r.clone(), slots: right_slots },
        ))
    }

    /// Pairs two elements: trees are juxtaposed and the right factor's slots
    /// are shifted up past the left factor's leaves. Inverse to
    /// [`Slotted::decompose`].
    pub fn dot(&self, other: &Slotted) -> Slotted {
        let shift = self.internal_degree();
        let mut slots = self.slots.clone();
        slots.extend(other.slots.iter().map(|s| s + shift));
        Slotted { tree: Tree::node(self.tree.clone(), other.tree.clone()), slots }
    }

    /// Operad composition, by induction on the internal degree: a closed
    /// leaf is inert, an open leaf is the identity, and a composite element
    /// distributes its arguments over its two factors and re-dots.
    pub fn gamma(&self, args: &[Slotted]) -> Result<Slotted, OperadError> {
        if args.len() != self.degree() {
            return Err(OperadError::ArityMismatch { expected: self.degree(), found: args.len() });
        }
        Ok(self.gamma_unchecked(args))
    }

    fn gamma_unchecked(&self, args: &[Slotted]) -> Slotted {
        match self.decompose() {
            None => {
                if self.slots.is_empty() {
                    self.clone()
                } else {
                    args[0].clone()
                }
            }
            Some((z1, z2)) => {
                let k = z1.degree();
                z1.gamma_unchecked(&args[..k]).dot(&z2.gamma_unchecked(&args[k..]))
            }
        }
    }

    /// All elements of the given operad degree with internal degree at most
    /// `max_internal`, ordered by internal degree, then tree enumeration
    /// order, then slot sets lexicographically.
    pub fn enumerate(degree: usize, max_internal: usize) -> Vec<Slotted> {
        let mut out = Vec::new();
        for j in degree.max(1)..=max_internal {
            for tree in Tree::enumerate(j) {
                for slots in (1..=j).combinations(degree) {
                    out.push(Slotted { tree: tree.clone(), slots });
                }
            }
        }
        out
    }

    /// The canonical quotient to the zero-extended operad: closed leaves
    /// become the zero, open leaves stay, and the pairing collapses through
    /// the dot product that drops zero factors.
    pub fn project_v0(&self) -> V0Tree {
        match self.decompose() {
            None => {
                if self.slots.is_empty() {
                    V0Tree::Zero
                } else {
                    V0Tree::Tree(Tree::Leaf)
                }
            }
            Some((z1, z2)) => z1.project_v0().dot(&z2.project_v0()),
        }
    }

    /// The inclusion of complete parenthesizations: every leaf is a slot.
    pub fn fully_slotted(tree: Tree) -> Self {
        let n = tree.degree();
        Slotted::new(tree, (1..=n).collect()).expect("every leaf selected once")
    }
}

impl fmt::Display for Slotted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{};{{{}}}]", self.tree, self.slots.iter().join(","))
    }
}

impl fmt::Debug for Slotted {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Slotted {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut sc = Scanner::new(s);
        let out = parse_slotted(&mut sc)?;
        sc.finish()?;
        Ok(out)
    }
}

pub(crate) fn parse_slotted(sc: &mut Scanner<'_>) -> Result<Slotted, ParseError> {
    sc.expect(b'[')?;
    let tree = parse_tree(sc)?;
    sc.expect(b';')?;
    sc.expect(b'{')?;
    let mut slots = Vec::new();
    if !sc.eat(b'}') {
        loop {
            slots.push(sc.number()?);
            if sc.eat(b'}') {
                break;
            }
            sc.expect(b',')?;
        }
    }
    let pos = sc.pos();
    sc.expect(b']')?;
    Slotted::new(tree, slots).map_err(|e| ParseError::new(pos, e))
}

/// The operad map out of the slotted operad determined by a degree-0 and a
/// degree-2 element of the target.
///
/// Slotted parenthesizations are freely generated by the closed leaf and the
/// fully slotted pairing, so such a choice extends uniquely: closed leaves
/// evaluate to `point`, open leaves to the target identity, and a composite
/// element to `generator` composed over the images of its two factors.
pub struct SlotEvaluator<'a, W: Operad> {
    target: &'a W,
    point: W::Elem,
    generator: W::Elem,
}

impl<'a, W: Operad> SlotEvaluator<'a, W> {
    /// `point` must have degree 0 and `generator` degree 2 in `target`.
    pub fn new(target: &'a W, point: W::Elem, generator: W::Elem) -> Result<Self, OperadError> {
        if target.degree(&point) != 0 {
            return Err(OperadError::ArityMismatch { expected: 0, found: target.degree(&point) });
        }
        if target.degree(&generator) != 2 {
            return Err(OperadError::ArityMismatch {
                expected: 2,
                found: target.degree(&generator),
            });
        }
        Ok(SlotEvaluator { target, point, generator })
    }

    pub fn eval(&self, z: &Slotted) -> W::Elem {
        match z.decompose() {
            None => {
                if z.degree() == 0 {
                    self.point.clone()
                } else {
                    self.target.identity()
                }
            }
            Some((z1, z2)) => {
                self.target.gamma(&self.generator, &[self.eval(&z1), self.eval(&z2)])
            }
        }
    }
}
