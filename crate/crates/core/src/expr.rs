//! Formal tensor expressions over a unit `I` and numbered variables.
//!
//! These are the objects the coherence machinery rewrites: binary tensor
//! trees whose leaves are either the unit or a variable `x1`, `x2`, ….
//! Text form: `E ::= "I" | "x" digits | "(" E "*" E ")"`.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::parse::{ParseError, Scanner};
use crate::tree::Tree;
use crate::OperadError;

/// One step of a subterm address.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Dir {
    L,
    R,
}

impl fmt::Display for Dir {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Dir::L => "L",
            Dir::R => "R",
        })
    }
}

/// A tensor expression: unit, variable, or pair.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Expr {
    Unit,
    Var(usize),
    Tensor(Box<Expr>, Box<Expr>),
}

impl Expr {
    pub fn tensor(left: Expr, right: Expr) -> Self {
        Expr::Tensor(Box::new(left), Box::new(right))
    }

    /// The subterm at `path`, if the path stays inside the expression.
    pub fn subexpr(&self, path: &[Dir]) -> Option<&Expr> {
        match path.split_first() {
            None => Some(self),
            Some((d, rest)) => match self {
                Expr::Tensor(l, r) => match d {
                    Dir::L => l.subexpr(rest),
                    Dir::R => r.subexpr(rest),
                },
                _ => None,
            },
        }
    }

    /// Rebuilds the expression with the subterm at `path` replaced.
    pub fn replace(&self, path: &[Dir], new: Expr) -> Option<Expr> {
        match path.split_first() {
            None => Some(new),
            Some((d, rest)) => match self {
                Expr::Tensor(l, r) => Some(match d {
                    Dir::L => Expr::tensor(l.replace(rest, new)?, (**r).clone()),
                    Dir::R => Expr::tensor((**l).clone(), r.replace(rest, new)?),
                }),
                _ => None,
            },
        }
    }

    /// Variable indices in left-to-right leaf order (units skipped).
    pub fn var_indices(&self) -> Vec<usize> {
        let mut out = Vec::new();
        self.collect_vars(&mut out);
        out
    }

    fn collect_vars(&self, out: &mut Vec<usize>) {
        match self {
            Expr::Unit => {}
            Expr::Var(i) => out.push(*i),
            Expr::Tensor(l, r) => {
                l.collect_vars(out);
                r.collect_vars(out);
            }
        }
    }

    pub fn var_count(&self) -> usize {
        match self {
            Expr::Unit => 0,
            Expr::Var(_) => 1,
            Expr::Tensor(l, r) => l.var_count() + r.var_count(),
        }
    }

    pub fn unit_count(&self) -> usize {
        match self {
            Expr::Unit => 1,
            Expr::Var(_) => 0,
            Expr::Tensor(l, r) => l.unit_count() + r.unit_count(),
        }
    }

    pub fn leaf_count(&self) -> usize {
        self.var_count() + self.unit_count()
    }

    /// True when no variable index appears twice.
    pub fn has_distinct_vars(&self) -> bool {
        let vars = self.var_indices();
        vars.iter().collect::<BTreeSet<_>>().len() == vars.len()
    }

    pub fn var_set(&self) -> BTreeSet<usize> {
        self.var_indices().into_iter().collect()
    }

    /// The underlying parenthesization shape, leaves anonymized.
    pub fn shape(&self) -> Tree {
        match self {
            Expr::Unit | Expr::Var(_) => Tree::Leaf,
            Expr::Tensor(l, r) => Tree::node(l.shape(), r.shape()),
        }
    }

    /// Builds an expression with the given shape and leaf sequence.
    ///
    /// Panics if the leaf count does not match the shape.
    pub fn from_shape(shape: &Tree, leaves: &[Expr]) -> Expr {
        assert_eq!(shape.degree(), leaves.len(), "leaf count must match shape");
        fn go(shape: &Tree, leaves: &mut std::slice::Iter<'_, Expr>) -> Expr {
            match shape {
                Tree::Leaf => leaves.next().expect("length checked").clone(),
                Tree::Node(l, r) => {
                    let left = go(l, leaves);
                    let right = go(r, leaves);
                    Expr::tensor(left, right)
                }
            }
        }
        go(shape, &mut leaves.iter())
    }
}

/// The bijection on variable-leaf positions that matches equal labels.
///
/// Position `i` (one-based, counting variable leaves of `src` left to
/// right) is sent to the position of the same variable in `tgt`. Fails when
/// either side repeats a variable or the two variable sets differ.
pub fn label_bijection(src: &Expr, tgt: &Expr) -> Result<crate::Permutation, OperadError> {
    let sv = src.var_indices();
    let tv = tgt.var_indices();
    if !src.has_distinct_vars() || !tgt.has_distinct_vars() {
        return Err(OperadError::LabelMismatch("repeated variable".to_string()));
    }
    if src.var_set() != tgt.var_set() {
        return Err(OperadError::LabelMismatch(format!(
            "variable sets differ: {:?} vs {:?}",
            src.var_set(),
            tgt.var_set()
        )));
    }
    let images = sv
        .iter()
        .map(|v| tv.iter().position(|w| w == v).expect("sets equal") + 1)
        .collect();
    crate::Permutation::from_one_based(images)
}

/// Every expression whose variables are exactly `x1..=xk` (each once, in
/// any order) with at most `max_units` unit leaves, over all
/// parenthesizations. For `vars = 0` this is the lone expression `I` (plus
/// the two-leaf unit insertions when `max_units` allows).
pub fn all_exprs(vars: usize, max_units: usize) -> Vec<Expr> {
    let mut out = Vec::new();
    for units in 0..=max_units {
        let leaves = vars + units;
        if leaves == 0 {
            continue;
        }
        let shapes = Tree::enumerate(leaves);
        for order in (1..=vars).permutations(vars) {
            for unit_positions in (0..leaves).combinations(units) {
                let mut seq = Vec::with_capacity(leaves);
                let mut next_var = order.iter();
                for p in 0..leaves {
                    if unit_positions.contains(&p) {
                        seq.push(Expr::Unit);
                    } else {
                        seq.push(Expr::Var(*next_var.next().expect("counts add up")));
                    }
                }
                for shape in &shapes {
                    out.push(Expr::from_shape(shape, &seq));
                }
            }
        }
    }
    out
}

impl fmt::Display for Expr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Expr::Unit => f.write_str("I"),
            Expr::Var(i) => write!(f, "x{i}"),
            Expr::Tensor(l, r) => write!(f, "({l}*{r})"),
        }
    }
}

impl serde::Serialize for Expr {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

pub(crate) fn parse_expr(sc: &mut Scanner<'_>) -> Result<Expr, ParseError> {
    sc.skip_ws();
    match sc.peek() {
        Some(b'I') => {
            sc.expect(b'I')?;
            Ok(Expr::Unit)
        }
        Some(b'x') => {
            sc.expect(b'x')?;
            Ok(Expr::Var(sc.number()?))
        }
        Some(b'(') => {
            sc.expect(b'(')?;
            let left = parse_expr(sc)?;
            sc.skip_ws();
            sc.expect(b'*')?;
            let right = parse_expr(sc)?;
            sc.skip_ws();
            sc.expect(b')')?;
            Ok(Expr::tensor(left, right))
        }
        _ => Err(sc.error("expected `I`, a variable, or `(`")),
    }
}

impl FromStr for Expr {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut sc = Scanner::new(s);
        let e = parse_expr(&mut sc)?;
        sc.finish()?;
        Ok(e)
    }
}
