//! The categorical layer: an indiscrete category over each degree of the
//! free symmetric operad on slotted parenthesizations, and executable
//! algebras over it.
//!
//! Objects of degree `n` are [`YOp`] values — a slotted parenthesization
//! with a permutation attached. Between any two objects of equal degree
//! there is exactly one morphism ([`YMor`]), so a morphism is just its
//! ordered pair of endpoints, and every diagram of morphisms commutes at
//! this level. The content lives in the algebra models ([`WordModel`],
//! [`ExprModel`]): acting on concrete carriers, each morphism becomes a
//! position-tracking bijection, and commutativity becomes a checkable
//! identity between composites of those bijections.

use std::fmt;

use crate::expr::Expr;
use crate::perm::Permutation;
use crate::slots::Slotted;
use crate::sym::{FreeSymOperad, SymElem};
use crate::tree::Tree;
use crate::view::{Operad, SymmetricOperad, ZOperad};
use crate::OperadError;

/// An object of the categorical operad: a slotted parenthesization with a
/// permutation of its slot count.
pub type YOp = SymElem<Slotted>;

/// The operad the objects form.
pub fn y_operad() -> FreeSymOperad<ZOperad> {
    FreeSymOperad::new(ZOperad)
}

/// Canonical text form of an object: `[tree;slots] | [perm]`.
pub fn yop_text(y: &YOp) -> String {
    format!("{} | {}", y.base, y.perm)
}

/// The nullary generator with the identity permutation attached.
pub fn e_object() -> YOp {
    SymElem::new(Slotted::nullary_generator(), Permutation::identity(0))
}

/// The binary generator with the identity permutation attached.
pub fn mu_object() -> YOp {
    SymElem::new(Slotted::binary_generator(), Permutation::identity(2))
}

/// The unique morphism between two objects of equal degree.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct YMor {
    pub src: YOp,
    pub tgt: YOp,
}

impl YMor {
    pub fn new(src: YOp, tgt: YOp) -> Result<Self, OperadError> {
        if src.base.degree() != tgt.base.degree() {
            return Err(OperadError::DegreeMismatch {
                left: src.base.degree(),
                right: tgt.base.degree(),
            });
        }
        Ok(YMor { src, tgt })
    }

    pub fn identity(y: &YOp) -> Self {
        YMor { src: y.clone(), tgt: y.clone() }
    }

    pub fn degree(&self) -> usize {
        self.src.base.degree()
    }

    pub fn is_identity(&self) -> bool {
        self.src == self.tgt
    }
}

impl fmt::Display for YMor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} => {}", yop_text(&self.src), yop_text(&self.tgt))
    }
}

/// Composition in an indiscrete category: endpoints must meet, and the
/// result is determined by them.
pub fn e_compose(g: &YMor, f: &YMor) -> Result<YMor, OperadError> {
    if f.tgt != g.src {
        return Err(OperadError::NotComposable(format!(
            "target {} of the first differs from source {} of the second",
            yop_text(&f.tgt),
            yop_text(&g.src)
        )));
    }
    Ok(YMor { src: f.src.clone(), tgt: g.tgt.clone() })
}

/// Operad composition on morphisms, componentwise on endpoints.
pub fn y_mor_gamma(outer: &YMor, args: &[YMor]) -> YMor {
    let y = y_operad();
    let srcs: Vec<YOp> = args.iter().map(|a| a.src.clone()).collect();
    let tgts: Vec<YOp> = args.iter().map(|a| a.tgt.clone()).collect();
    YMor { src: y.gamma(&outer.src, &srcs), tgt: y.gamma(&outer.tgt, &tgts) }
}

/// The symmetric action on morphisms, componentwise on endpoints.
pub fn y_mor_act(m: &YMor, p: &Permutation) -> YMor {
    let y = y_operad();
    YMor { src: y.act(&m.src, p), tgt: y.act(&m.tgt, p) }
}

/// The four generator isomorphisms, as morphisms of the categorical operad.
pub struct StructureMorphisms {
    /// `(a⊗b)⊗c -> a⊗(b⊗c)`, degree 3.
    pub alpha: YMor,
    /// `a⊗b -> b⊗a`, degree 2: same slotted base, permutation flips.
    pub tau: YMor,
    /// `e⊗a -> a`, degree 1.
    pub eta_l: YMor,
    /// `a⊗e -> a`, degree 1.
    pub eta_r: YMor,
}

pub fn structure_morphisms() -> StructureMorphisms {
    let leaf = Tree::Leaf;
    let pair = Tree::pair();
    let slotted = |tree: Tree, slots: &[usize]| {
        Slotted::new(tree, slots.to_vec()).expect("generator slots are valid")
    };
    let with_id = |z: Slotted| {
        let d = z.degree();
        SymElem::new(z, Permutation::identity(d))
    };
    let alpha = YMor {
        src: with_id(slotted(Tree::node(pair.clone(), leaf.clone()), &[1, 2, 3])),
        tgt: with_id(slotted(Tree::node(leaf.clone(), pair.clone()), &[1, 2, 3])),
    };
    let flip = Permutation::from_one_based(vec![2, 1]).expect("transposition");
    let tau = YMor {
        src: with_id(Slotted::binary_generator()),
        tgt: SymElem::new(Slotted::binary_generator(), flip),
    };
    let eta_r = YMor {
        src: with_id(slotted(pair.clone(), &[1])),
        tgt: with_id(Slotted::identity()),
    };
    let eta_l = YMor {
        src: with_id(slotted(pair, &[2])),
        tgt: with_id(Slotted::identity()),
    };
    StructureMorphisms { alpha, tau, eta_l, eta_r }
}

/// For each slot of `y` in leaf order, the (zero-based) index of the input
/// that feeds it: slot `i` reads input `σ⁻¹(i)`.
pub(crate) fn slot_inputs(y: &YOp) -> Vec<usize> {
    let inv = y.perm.inverse();
    (0..y.base.degree()).map(|i| inv.apply(i)).collect()
}

/// Start offset of each input's items in the concatenated layout of `y`,
/// given per-input item counts.
fn layout_starts(y: &YOp, sizes: &[usize]) -> Vec<usize> {
    let mut starts = vec![0usize; sizes.len()];
    let mut acc = 0;
    for j in slot_inputs(y) {
        starts[j] = acc;
        acc += sizes[j];
    }
    starts
}

/// The bijection tracking each input item from its position in the layout
/// of `src` to its position in the layout of `tgt`.
fn tracking_bijection(src: &YOp, tgt: &YOp, sizes: &[usize]) -> Permutation {
    let s = layout_starts(src, sizes);
    let t = layout_starts(tgt, sizes);
    let total: usize = sizes.iter().sum();
    let mut images = vec![0usize; total];
    for (j, &size) in sizes.iter().enumerate() {
        for r in 0..size {
            images[s[j] + r] = t[j] + r;
        }
    }
    Permutation::from_zero_based(images).expect("each item lands exactly once")
}

/// An algebra over the categorical operad on a concrete carrier: objects
/// with a tracked item count, acted on by operations, with each unique
/// morphism realized as an item-tracking bijection.
pub trait YModel {
    type Obj: Clone + Eq + fmt::Debug + fmt::Display;
    type Mor: Clone + Eq + fmt::Debug + fmt::Display;

    fn name(&self) -> &'static str;
    /// Applies an operation of degree `n` to `n` carrier objects.
    fn object(&self, y: &YOp, inputs: &[Self::Obj]) -> Self::Obj;
    /// The tracking bijection a morphism induces at the given inputs.
    fn morphism(&self, m: &YMor, inputs: &[Self::Obj]) -> Self::Mor;
    /// Composes two tracked bijections; endpoints must meet.
    fn compose(&self, g: &Self::Mor, f: &Self::Mor) -> Result<Self::Mor, OperadError>;
}

/// A word over a small alphabet; the strict model's objects.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Word(pub String);

impl Word {
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "\"{}\"", self.0)
    }
}

/// All words over the first `alphabet` lowercase letters with length at
/// most `max_len`, shortest first, lexicographic within a length.
pub fn word_pool(alphabet: usize, max_len: usize) -> Vec<Word> {
    assert!(alphabet <= 26, "alphabet is lowercase ASCII");
    let letters: Vec<char> = (0..alphabet).map(|i| (b'a' + i as u8) as char).collect();
    let mut pool = vec![Word(String::new())];
    let mut frontier = pool.clone();
    for _ in 0..max_len {
        let mut next = Vec::new();
        for w in &frontier {
            for &c in &letters {
                let mut s = w.0.clone();
                s.push(c);
                next.push(Word(s));
            }
        }
        pool.extend(next.iter().cloned());
        frontier = next;
    }
    pool
}

/// A letter-preserving bijection between two words.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WordMorphism {
    pub src: Word,
    pub tgt: Word,
    pub bij: Permutation,
}

impl WordMorphism {
    pub fn new(src: Word, tgt: Word, bij: Permutation) -> Result<Self, OperadError> {
        if src.len() != tgt.len() || bij.degree() != src.len() {
            return Err(OperadError::DegreeMismatch { left: src.len(), right: tgt.len() });
        }
        let sb = src.0.as_bytes();
        let tb = tgt.0.as_bytes();
        for i in 0..sb.len() {
            if tb[bij.apply(i)] != sb[i] {
                return Err(OperadError::LabelMismatch(format!(
                    "position {} of {} carries `{}`, but lands on `{}` in {}",
                    i + 1,
                    src,
                    sb[i] as char,
                    tb[bij.apply(i)] as char,
                    tgt
                )));
            }
        }
        Ok(WordMorphism { src, tgt, bij })
    }

    pub fn identity(w: &Word) -> Self {
        WordMorphism { src: w.clone(), tgt: w.clone(), bij: Permutation::identity(w.len()) }
    }
}

impl fmt::Display for WordMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} via {}", self.src, self.tgt, self.bij)
    }
}

/// The strict model: tensor is concatenation, the unit is the empty word,
/// and every structure morphism is a block rearrangement of letters.
#[derive(Clone, Copy, Debug, Default)]
pub struct WordModel;

impl YModel for WordModel {
    type Obj = Word;
    type Mor = WordMorphism;

    fn name(&self) -> &'static str {
        "word"
    }

    fn object(&self, y: &YOp, inputs: &[Word]) -> Word {
        assert_eq!(inputs.len(), y.base.degree(), "arity mismatch");
        let mut out = String::new();
        for j in slot_inputs(y) {
            out.push_str(&inputs[j].0);
        }
        Word(out)
    }

    fn morphism(&self, m: &YMor, inputs: &[Word]) -> WordMorphism {
        assert_eq!(inputs.len(), m.degree(), "arity mismatch");
        let sizes: Vec<usize> = inputs.iter().map(Word::len).collect();
        WordMorphism {
            src: self.object(&m.src, inputs),
            tgt: self.object(&m.tgt, inputs),
            bij: tracking_bijection(&m.src, &m.tgt, &sizes),
        }
    }

    fn compose(&self, g: &WordMorphism, f: &WordMorphism) -> Result<WordMorphism, OperadError> {
        if f.tgt != g.src {
            return Err(OperadError::NotComposable(format!(
                "{} then {}: endpoints do not meet",
                f, g
            )));
        }
        Ok(WordMorphism {
            src: f.src.clone(),
            tgt: g.tgt.clone(),
            bij: g.bij.compose(&f.bij).expect("equal lengths"),
        })
    }
}

/// A variable-tracking bijection between two tensor expressions.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExprMorphism {
    pub src: Expr,
    pub tgt: Expr,
    /// Bijection on variable-leaf positions (units are not tracked).
    pub bij: Permutation,
}

impl ExprMorphism {
    pub fn identity(e: &Expr) -> Self {
        ExprMorphism { src: e.clone(), tgt: e.clone(), bij: Permutation::identity(e.var_count()) }
    }
}

impl fmt::Display for ExprMorphism {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} -> {} via {}", self.src, self.tgt, self.bij)
    }
}

/// The free model: tensor builds a pair, the unit is the unit leaf, and
/// structure morphisms genuinely reshape the expression while the tracked
/// bijection follows the variable leaves.
#[derive(Clone, Copy, Debug, Default)]
pub struct ExprModel;

impl YModel for ExprModel {
    type Obj = Expr;
    type Mor = ExprMorphism;

    fn name(&self) -> &'static str {
        "expression"
    }

    fn object(&self, y: &YOp, inputs: &[Expr]) -> Expr {
        assert_eq!(inputs.len(), y.base.degree(), "arity mismatch");
        let inv = y.perm.inverse();
        let slots = y.base.slots();
        let mut leaves = Vec::with_capacity(y.base.internal_degree());
        for p in 1..=y.base.internal_degree() {
            match slots.iter().position(|&s| s == p) {
                Some(rank) => leaves.push(inputs[inv.apply(rank)].clone()),
                None => leaves.push(Expr::Unit),
            }
        }
        Expr::from_shape(y.base.tree(), &leaves)
    }

    fn morphism(&self, m: &YMor, inputs: &[Expr]) -> ExprMorphism {
        assert_eq!(inputs.len(), m.degree(), "arity mismatch");
        let sizes: Vec<usize> = inputs.iter().map(Expr::var_count).collect();
        ExprMorphism {
            src: self.object(&m.src, inputs),
            tgt: self.object(&m.tgt, inputs),
            bij: tracking_bijection(&m.src, &m.tgt, &sizes),
        }
    }

    fn compose(&self, g: &ExprMorphism, f: &ExprMorphism) -> Result<ExprMorphism, OperadError> {
        if f.tgt != g.src {
            return Err(OperadError::NotComposable(format!(
                "{} then {}: endpoints do not meet",
                f, g
            )));
        }
        Ok(ExprMorphism {
            src: f.src.clone(),
            tgt: g.tgt.clone(),
            bij: g.bij.compose(&f.bij).expect("equal variable counts"),
        })
    }
}
