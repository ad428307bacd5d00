//! Complete parenthesizations as full binary trees.
//!
//! A tree of degree `n` is a way of fully parenthesizing a product of `n`
//! factors. Substituting trees for leaves makes these the operations of a
//! non-symmetric operad; [`Tree::gamma`] is that substitution. Two quotients
//! live here as well: [`V0Tree`] adds an absorbing zero in degree 0, and
//! [`TPoint`] collapses everything to one operation per degree.

use std::fmt;
use std::str::FromStr;

use crate::parse::{ParseError, Scanner};
use crate::view::Operad;
use crate::OperadError;

/// A complete parenthesization: a full binary tree whose leaves are the
/// argument positions, written `1` for a leaf and `(l,r)` for a pairing.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Tree {
    Leaf,
    Node(Box<Tree>, Box<Tree>),
}

impl Tree {
    pub fn leaf() -> Self {
        Tree::Leaf
    }

    pub fn node(left: Tree, right: Tree) -> Self {
        Tree::Node(Box::new(left), Box::new(right))
    }

    /// The binary generator `(1,1)`.
    pub fn pair() -> Self {
        Tree::node(Tree::Leaf, Tree::Leaf)
    }

    /// Number of leaves, i.e. the operad degree.
    pub fn degree(&self) -> usize {
        match self {
            Tree::Leaf => 1,
            Tree::Node(l, r) => l.degree() + r.degree(),
        }
    }

    pub fn children(&self) -> Option<(&Tree, &Tree)> {
        match self {
            Tree::Leaf => None,
            Tree::Node(l, r) => Some((l, r)),
        }
    }

    /// Operad composition: grafts `args[i]` onto the `i`-th leaf.
    ///
    /// A leaf returns its argument unchanged; a pairing splits the argument
    /// list between its two sides and juxtaposes the results.
    pub fn gamma(&self, args: &[Tree]) -> Result<Tree, OperadError> {
        if args.len() != self.degree() {
            return Err(OperadError::ArityMismatch { expected: self.degree(), found: args.len() });
        }
        Ok(self.gamma_unchecked(args))
    }

    fn gamma_unchecked(&self, args: &[Tree]) -> Tree {
        match self {
            Tree::Leaf => args[0].clone(),
            Tree::Node(l, r) => {
                let k = l.degree();
                Tree::node(l.gamma_unchecked(&args[..k]), r.gamma_unchecked(&args[k..]))
            }
        }
    }

    /// All parenthesizations of `n` factors, ordered by the size of the left
    /// factor (ascending), then recursively within each factor.
    pub fn enumerate(n: usize) -> Vec<Tree> {
        match n {
            0 => Vec::new(),
            1 => vec![Tree::Leaf],
            _ => {
                let mut out = Vec::new();
                for k in 1..n {
                    for l in Tree::enumerate(k) {
                        for r in Tree::enumerate(n - k) {
                            out.push(Tree::node(l.clone(), r));
                        }
                    }
                }
                out
            }
        }
    }
}

impl fmt::Display for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Tree::Leaf => write!(f, "1"),
            Tree::Node(l, r) => write!(f, "({l},{r})"),
        }
    }
}

impl fmt::Debug for Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for Tree {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut sc = Scanner::new(s);
        let tree = parse_tree(&mut sc)?;
        sc.finish()?;
        Ok(tree)
    }
}

pub(crate) fn parse_tree(sc: &mut Scanner<'_>) -> Result<Tree, ParseError> {
    sc.skip_ws();
    if sc.eat(b'1') {
        Ok(Tree::Leaf)
    } else if sc.eat(b'(') {
        let l = parse_tree(sc)?;
        sc.expect(b',')?;
        let r = parse_tree(sc)?;
        sc.expect(b')')?;
        Ok(Tree::node(l, r))
    } else {
        Err(ParseError::new(sc.pos(), "expected `1` or `(`"))
    }
}

/// An element of the zero-extended operad: either the absorbing `0` in
/// degree 0, or an ordinary parenthesization.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum V0Tree {
    Zero,
    Tree(Tree),
}

impl V0Tree {
    pub fn degree(&self) -> usize {
        match self {
            V0Tree::Zero => 0,
            V0Tree::Tree(t) => t.degree(),
        }
    }

    /// Collapse to the terminal operad, where only the degree survives.
    pub fn to_point(&self) -> TPoint {
        TPoint(self.degree())
    }

    /// Pairing with the zero absorbed: `a.dot(b)` is the ordinary pairing
    /// `(a,b)`, except that a zero factor simply disappears. The zero is a
    /// two-sided unit for this product, which is what makes algebras over
    /// this operad unital.
    pub fn dot(&self, other: &V0Tree) -> V0Tree {
        match (self, other) {
            (a, V0Tree::Zero) => a.clone(),
            (V0Tree::Zero, b) => b.clone(),
            (V0Tree::Tree(a), V0Tree::Tree(b)) => V0Tree::Tree(Tree::node(a.clone(), b.clone())),
        }
    }

    /// Operad composition; the outer operation is a plain parenthesization
    /// unless it is `0` itself (degree 0, no arguments to take).
    pub fn gamma(&self, args: &[V0Tree]) -> Result<V0Tree, OperadError> {
        if args.len() != self.degree() {
            return Err(OperadError::ArityMismatch { expected: self.degree(), found: args.len() });
        }
        match self {
            V0Tree::Zero => Ok(V0Tree::Zero),
            V0Tree::Tree(t) => Ok(gamma_tree(t, args)),
        }
    }

    /// Degrees `>= 1` match the plain parenthesizations; degree 0 holds only
    /// the zero.
    pub fn enumerate(n: usize) -> Vec<V0Tree> {
        if n == 0 {
            vec![V0Tree::Zero]
        } else {
            Tree::enumerate(n).into_iter().map(V0Tree::Tree).collect()
        }
    }

    /// The unique map to the terminal operad.
    pub fn collapse(&self) -> TPoint {
        TPoint(self.degree())
    }
}

fn gamma_tree(t: &Tree, args: &[V0Tree]) -> V0Tree {
    match t {
        Tree::Leaf => args[0].clone(),
        Tree::Node(l, r) => {
            let k = l.degree();
            gamma_tree(l, &args[..k]).dot(&gamma_tree(r, &args[k..]))
        }
    }
}

impl fmt::Display for V0Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            V0Tree::Zero => write!(f, "0"),
            V0Tree::Tree(t) => write!(f, "{t}"),
        }
    }
}

impl fmt::Debug for V0Tree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for V0Tree {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut sc = Scanner::new(s);
        sc.skip_ws();
        let out = if sc.eat(b'0') { V0Tree::Zero } else { V0Tree::Tree(parse_tree(&mut sc)?) };
        sc.finish()?;
        Ok(out)
    }
}

/// The single operation of each degree in the terminal operad, written `*n`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TPoint(pub usize);

impl TPoint {
    pub fn degree(&self) -> usize {
        self.0
    }

    /// Composition can only bookkeep: the result's degree is the sum of the
    /// argument degrees.
    pub fn gamma(&self, args: &[TPoint]) -> Result<TPoint, OperadError> {
        if args.len() != self.0 {
            return Err(OperadError::ArityMismatch { expected: self.0, found: args.len() });
        }
        Ok(TPoint(args.iter().map(|a| a.0).sum()))
    }
}

impl fmt::Display for TPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "*{}", self.0)
    }
}

impl fmt::Debug for TPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl FromStr for TPoint {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut sc = Scanner::new(s);
        sc.expect(b'*')?;
        let n = sc.number()?;
        sc.finish()?;
        Ok(TPoint(n))
    }
}

/// The operad map out of the parenthesization operad determined by a choice
/// of binary operation in the target.
///
/// Parenthesizations are freely generated by the single pairing `(1,1)`:
/// sending `(1,1)` to any degree-2 element of any operad extends uniquely to
/// a map of operads, and this evaluator computes that extension. Leaves go
/// to the target's identity; a pairing becomes the generator composed over
/// the images of its two sides.
pub struct TreeEvaluator<'a, W: Operad> {
    target: &'a W,
    generator: W::Elem,
}

impl<'a, W: Operad> TreeEvaluator<'a, W> {
    /// `generator` must have degree 2 in `target`.
    pub fn new(target: &'a W, generator: W::Elem) -> Result<Self, OperadError> {
        let found = target.degree(&generator);
        if found != 2 {
            return Err(OperadError::ArityMismatch { expected: 2, found });
        }
        Ok(TreeEvaluator { target, generator })
    }

    pub fn eval(&self, t: &Tree) -> W::Elem {
        match t {
            Tree::Leaf => self.target.identity(),
            Tree::Node(l, r) => {
                self.target.gamma(&self.generator, &[self.eval(l), self.eval(r)])
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::collections::HashSet;

    fn t(s: &str) -> Tree {
        s.parse().unwrap()
    }

    /// Independent Catalan recursion, kept separate from the enumerator.
    fn catalan(n: usize) -> usize {
        if n == 0 {
            1
        } else {
            (0..n).map(|k| catalan(k) * catalan(n - 1 - k)).sum()
        }
    }

    #[test]
    fn degree_counts_leaves() {
        assert_eq!(Tree::Leaf.degree(), 1);
        assert_eq!(t("((1,1),(1,1))").degree(), 4);
    }

    #[test]
    fn gamma_grafts_by_position() {
        assert_eq!(Tree::Leaf.gamma(&[t("(1,1)")]).unwrap(), t("(1,1)"));
        assert_eq!(Tree::pair().gamma(&[t("(1,1)"), Tree::Leaf]).unwrap(), t("((1,1),1)"));
        assert_eq!(
            t("((1,1),1)").gamma(&[Tree::Leaf, t("(1,1)"), Tree::Leaf]).unwrap(),
            t("((1,(1,1)),1)")
        );
        assert!(Tree::pair().gamma(&[Tree::Leaf]).is_err());
    }

    #[test]
    fn enumerate_small_degrees() {
        assert_eq!(Tree::enumerate(0), Vec::<Tree>::new());
        assert_eq!(Tree::enumerate(1), vec![Tree::Leaf]);
        assert_eq!(Tree::enumerate(2), vec![Tree::pair()]);
        // Left factor size ascending: the right comb comes first.
        assert_eq!(Tree::enumerate(3), vec![t("(1,(1,1))"), t("((1,1),1)")]);
        assert_eq!(Tree::enumerate(5).len(), 14);
    }

    #[test]
    fn enumerate_matches_catalan_and_is_duplicate_free() {
        for n in 1..=8 {
            let all = Tree::enumerate(n);
            assert_eq!(all.len(), catalan(n - 1), "degree {n}");
            let distinct: HashSet<_> = all.iter().cloned().collect();
            assert_eq!(distinct.len(), all.len(), "degree {n}");
            assert!(all.iter().all(|tree| tree.degree() == n));
        }
    }

    #[test]
    fn tree_text_roundtrip() {
        for n in 1..=6 {
            for tree in Tree::enumerate(n) {
                assert_eq!(tree.to_string().parse::<Tree>().unwrap(), tree);
            }
        }
        assert!("(1,1".parse::<Tree>().is_err());
        assert!("2".parse::<Tree>().is_err());
        assert!("(1,1)x".parse::<Tree>().is_err());
    }

    #[test]
    fn zero_is_a_unit_for_dot() {
        let zero = V0Tree::Zero;
        let one = V0Tree::Tree(Tree::Leaf);
        assert_eq!(zero.dot(&one), one);
        assert_eq!(one.dot(&zero), one);
        assert_eq!(zero.dot(&zero), zero);
        assert_eq!(one.dot(&one), V0Tree::Tree(Tree::pair()));
    }

    #[test]
    fn dot_is_a_unital_magma_not_a_monoid() {
        // Pairing is deliberately non-associative; the only triple products
        // that agree are the ones where a zero factor drops out.
        let pool: Vec<V0Tree> = (0..=4).flat_map(V0Tree::enumerate).collect();
        for a in &pool {
            for b in &pool {
                for c in &pool {
                    let assoc = a.dot(b).dot(c) == a.dot(&b.dot(c));
                    if [a, b, c].iter().any(|t| **t == V0Tree::Zero) {
                        assert!(assoc, "unit factor must not disturb grouping");
                    }
                }
            }
        }
        let one = V0Tree::Tree(Tree::Leaf);
        assert_ne!(one.dot(&one).dot(&one), one.dot(&one.dot(&one)));
        assert_eq!(one.dot(&one).dot(&one).degree(), 3);
    }

    #[test]
    fn v0_gamma_absorbs_zero_arguments() {
        let outer = V0Tree::Tree(Tree::pair());
        let args = [V0Tree::Tree(Tree::Leaf), V0Tree::Zero];
        assert_eq!(outer.gamma(&args).unwrap(), V0Tree::Tree(Tree::Leaf));
        let zeros = [V0Tree::Zero, V0Tree::Zero];
        assert_eq!(outer.gamma(&zeros).unwrap(), V0Tree::Zero);
        let pure = [V0Tree::Tree(Tree::Leaf), V0Tree::Tree(Tree::pair())];
        assert_eq!(outer.gamma(&pure).unwrap(), V0Tree::Tree(t("(1,(1,1))")));
        assert_eq!(V0Tree::Zero.gamma(&[]).unwrap(), V0Tree::Zero);
    }

    #[test]
    fn v0_enumerate_adds_only_the_zero() {
        assert_eq!(V0Tree::enumerate(0), vec![V0Tree::Zero]);
        assert_eq!(V0Tree::enumerate(3).len(), 2);
    }

    #[test]
    fn v0_text_roundtrip() {
        for text in ["0", "1", "(1,(1,1))"] {
            assert_eq!(text.parse::<V0Tree>().unwrap().to_string(), text);
        }
    }

    #[test]
    fn terminal_points_compose_by_degree_sum() {
        let p2 = TPoint(2);
        assert_eq!(p2.gamma(&[TPoint(3), TPoint(0)]).unwrap(), TPoint(3));
        assert!(p2.gamma(&[TPoint(1)]).is_err());
        assert_eq!("*4".parse::<TPoint>().unwrap(), TPoint(4));
        assert_eq!(TPoint(0).to_string(), "*0");
    }

    #[test]
    fn collapse_reports_degree() {
        assert_eq!(V0Tree::Zero.collapse(), TPoint(0));
        assert_eq!(V0Tree::Tree(t("(1,(1,1))")).collapse(), TPoint(3));
    }
}
