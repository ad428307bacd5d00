//! Rewriting tensor expressions by the structural isomorphisms, and the
//! synthesizer that produces, for any two expressions over the same distinct
//! variables, a replayable sequence of generator moves carrying one to the
//! other.
//!
//! The strategy factors through a normal form — the unit-free right comb
//! with variables in ascending order of the target's leaf sequence: first
//! strip units innermost-first, then rotate to a right comb, then bubble the
//! leaves into place with associator-conjugated adjacent swaps, and finally
//! undo the target's own normalization in reverse. No minimality is claimed;
//! the contract is exact replay and the induced leaf bijection.

use std::fmt;

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::expr::{label_bijection, Dir, Expr};
use crate::perm::Permutation;
use crate::report::Report;
use crate::OperadError;

/// The generator isomorphisms, as rewrite rules.
///
/// `Tau` is its own inverse so it has no starred partner.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum MoveKind {
    /// `((a*b)*c) -> (a*(b*c))`
    Alpha,
    /// `(a*(b*c)) -> ((a*b)*c)`
    AlphaInv,
    /// `(a*b) -> (b*a)`
    Tau,
    /// `(I*a) -> a`
    EtaL,
    /// `a -> (I*a)`
    EtaLInv,
    /// `(a*I) -> a`
    EtaR,
    /// `a -> (a*I)`
    EtaRInv,
}

impl MoveKind {
    pub fn name(self) -> &'static str {
        match self {
            MoveKind::Alpha => "alpha",
            MoveKind::AlphaInv => "alpha_inv",
            MoveKind::Tau => "tau",
            MoveKind::EtaL => "eta_l",
            MoveKind::EtaLInv => "eta_l_inv",
            MoveKind::EtaR => "eta_r",
            MoveKind::EtaRInv => "eta_r_inv",
        }
    }

    pub fn inverse(self) -> Self {
        match self {
            MoveKind::Alpha => MoveKind::AlphaInv,
            MoveKind::AlphaInv => MoveKind::Alpha,
            MoveKind::Tau => MoveKind::Tau,
            MoveKind::EtaL => MoveKind::EtaLInv,
            MoveKind::EtaLInv => MoveKind::EtaL,
            MoveKind::EtaR => MoveKind::EtaRInv,
            MoveKind::EtaRInv => MoveKind::EtaR,
        }
    }
}

/// One rewrite: a generator applied at a subterm address.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Move {
    pub kind: MoveKind,
    pub path: Vec<Dir>,
}

impl Move {
    pub fn new(kind: MoveKind, path: Vec<Dir>) -> Self {
        Move { kind, path }
    }

    pub fn inverse(&self) -> Move {
        Move { kind: self.kind.inverse(), path: self.path.clone() }
    }

    fn path_string(&self) -> String {
        self.path.iter().map(|d| d.to_string()).collect()
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.path.is_empty() {
            f.write_str(self.kind.name())
        } else {
            write!(f, "{}@{}", self.kind.name(), self.path_string())
        }
    }
}

impl Serialize for Move {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("Move", 2)?;
        s.serialize_field("kind", self.kind.name())?;
        s.serialize_field("path", &self.path_string())?;
        s.end()
    }
}

/// Applies one move, or explains why its shape precondition fails.
pub fn apply_move(e: &Expr, m: &Move) -> Result<Expr, OperadError> {
    let at = e
        .subexpr(&m.path)
        .ok_or_else(|| OperadError::BadMove(format!("{m}: path leaves the expression {e}")))?;
    let bad = |need: &str| {
        OperadError::BadMove(format!("{m}: subterm {at} is not of shape {need}"))
    };
    let rewritten = match m.kind {
        MoveKind::Alpha => match at {
            Expr::Tensor(lt, c) => match &**lt {
                Expr::Tensor(a, b) => {
                    Expr::tensor((**a).clone(), Expr::tensor((**b).clone(), (**c).clone()))
                }
                _ => return Err(bad("((a*b)*c)")),
            },
            _ => return Err(bad("((a*b)*c)")),
        },
        MoveKind::AlphaInv => match at {
            Expr::Tensor(a, rt) => match &**rt {
                Expr::Tensor(b, c) => {
                    Expr::tensor(Expr::tensor((**a).clone(), (**b).clone()), (**c).clone())
                }
                _ => return Err(bad("(a*(b*c))")),
            },
            _ => return Err(bad("(a*(b*c))")),
        },
        MoveKind::Tau => match at {
            Expr::Tensor(a, b) => Expr::tensor((**b).clone(), (**a).clone()),
            _ => return Err(bad("(a*b)")),
        },
        MoveKind::EtaL => match at {
            Expr::Tensor(l, a) if **l == Expr::Unit => (**a).clone(),
            _ => return Err(bad("(I*a)")),
        },
        MoveKind::EtaLInv => Expr::tensor(Expr::Unit, at.clone()),
        MoveKind::EtaR => match at {
            Expr::Tensor(a, r) if **r == Expr::Unit => (**a).clone(),
            _ => return Err(bad("(a*I)")),
        },
        MoveKind::EtaRInv => Expr::tensor(at.clone(), Expr::Unit),
    };
    Ok(e.replace(&m.path, rewritten).expect("path already validated"))
}

/// A move sequence anchored at its starting expression.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MoveSeq {
    pub source: Expr,
    pub moves: Vec<Move>,
}

impl MoveSeq {
    pub fn new(source: Expr, moves: Vec<Move>) -> Self {
        MoveSeq { source, moves }
    }

    /// Replays the moves in order, failing on the first bad precondition.
    pub fn replay(&self) -> Result<Expr, OperadError> {
        let mut e = self.source.clone();
        for m in &self.moves {
            e = apply_move(&e, m)?;
        }
        Ok(e)
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

/// The variable-leaf bijection a replay induces, tracked through the moves
/// themselves (not by matching labels): position `i` among the source's
/// variable leaves is sent to the final position of that same leaf.
pub fn moveseq_bijection(s: &MoveSeq) -> Result<Permutation, OperadError> {
    // Relabel the variable leaves by their source positions, replay, and
    // read the final leaf order. Moves are shape-directed, so relabeling
    // does not disturb replay.
    let n = s.source.var_count();
    let mut next = 1usize..;
    let relabeled = relabel(&s.source, &mut next);
    let mut e = relabeled;
    for m in &s.moves {
        e = apply_move(&e, m)?;
    }
    let final_order = e.var_indices();
    let mut images = vec![0usize; n];
    for (pos, src_leaf) in final_order.iter().enumerate() {
        images[src_leaf - 1] = pos + 1;
    }
    Permutation::from_one_based(images)
}

fn relabel(e: &Expr, next: &mut std::ops::RangeFrom<usize>) -> Expr {
    match e {
        Expr::Unit => Expr::Unit,
        Expr::Var(_) => Expr::Var(next.next().expect("infinite range")),
        Expr::Tensor(l, r) => {
            let left = relabel(l, next);
            let right = relabel(r, next);
            Expr::tensor(left, right)
        }
    }
}

/// Strips every unit leaf with η moves, innermost first. The result of
/// replay is unit-free, except that an all-unit expression collapses to the
/// single leaf `I`.
pub fn eliminate_units(e: &Expr) -> MoveSeq {
    let mut moves = Vec::new();
    elim(e, &mut Vec::new(), &mut moves);
    MoveSeq::new(e.clone(), moves)
}

fn elim(e: &Expr, path: &mut Vec<Dir>, moves: &mut Vec<Move>) -> Expr {
    match e {
        Expr::Unit | Expr::Var(_) => e.clone(),
        Expr::Tensor(l, r) => {
            path.push(Dir::L);
            let l = elim(l, path, moves);
            path.pop();
            path.push(Dir::R);
            let r = elim(r, path, moves);
            path.pop();
            if l == Expr::Unit {
                moves.push(Move::new(MoveKind::EtaL, path.clone()));
                r
            } else if r == Expr::Unit {
                moves.push(Move::new(MoveKind::EtaR, path.clone()));
                l
            } else {
                Expr::tensor(l, r)
            }
        }
    }
}

/// Rotates a unit-free expression into the right comb over the same leaf
/// sequence, using only `alpha` moves: normalize the left subtree, peel its
/// head off with one associator, recurse into the right.
pub fn right_associate(e: &Expr) -> Result<MoveSeq, OperadError> {
    if e.unit_count() > 0 {
        return Err(OperadError::BadMove(format!(
            "cannot right-associate {e}: it still contains units"
        )));
    }
    let mut moves = Vec::new();
    rotate(e, &mut Vec::new(), &mut moves);
    Ok(MoveSeq::new(e.clone(), moves))
}

fn rotate(e: &Expr, path: &mut Vec<Dir>, moves: &mut Vec<Move>) -> Expr {
    match e {
        Expr::Unit | Expr::Var(_) => e.clone(),
        Expr::Tensor(l, r) => {
            path.push(Dir::L);
            let l = rotate(l, path, moves);
            path.pop();
            match l {
                Expr::Tensor(a, b) => {
                    // (itself a right comb, so `a` is a leaf)
                    moves.push(Move::new(MoveKind::Alpha, path.clone()));
                    let shifted = Expr::tensor((*b).clone(), (**r).clone());
                    path.push(Dir::R);
                    let tail = rotate(&shifted, path, moves);
                    path.pop();
                    Expr::tensor((*a).clone(), tail)
                }
                leaf => {
                    path.push(Dir::R);
                    let tail = rotate(r, path, moves);
                    path.pop();
                    Expr::tensor(leaf, tail)
                }
            }
        }
    }
}

/// Reorders the leaves of a right comb over distinct variables into
/// `target_order`, by adjacent transpositions: a swap touching the last two
/// leaves is a bare `tau`; any other adjacent swap is the conjugated
/// pattern `alpha_inv`, `tau` at the left factor, `alpha`.
pub fn sort_leaves(e: &Expr, target_order: &[usize]) -> Result<MoveSeq, OperadError> {
    let current = e.var_indices();
    if !e.has_distinct_vars() {
        return Err(OperadError::LabelMismatch(format!("{e} repeats a variable")));
    }
    {
        let mut a = current.clone();
        let mut b = target_order.to_vec();
        a.sort_unstable();
        b.sort_unstable();
        if a != b {
            return Err(OperadError::LabelMismatch(format!(
                "target order {target_order:?} is not a permutation of the leaves of {e}"
            )));
        }
    }
    let n = current.len();
    let rank = |v: usize| target_order.iter().position(|&w| w == v).expect("checked above");
    let mut seq = current;
    let mut moves = Vec::new();
    // Bubble sort; each pass sinks one out-of-place leaf rightwards.
    loop {
        let mut swapped = false;
        for i in 0..n.saturating_sub(1) {
            if rank(seq[i]) > rank(seq[i + 1]) {
                seq.swap(i, i + 1);
                let spine: Vec<Dir> = std::iter::repeat(Dir::R).take(i).collect();
                if i + 2 == n {
                    // The comb ends (x_i * x_{i+1}); swap in place.
                    moves.push(Move::new(MoveKind::Tau, spine));
                } else {
                    // At the spine node the comb reads (x_i * (x_{i+1} * rest)).
                    let mut left = spine.clone();
                    left.push(Dir::L);
                    moves.push(Move::new(MoveKind::AlphaInv, spine.clone()));
                    moves.push(Move::new(MoveKind::Tau, left));
                    moves.push(Move::new(MoveKind::Alpha, spine));
                }
                swapped = true;
            }
        }
        if !swapped {
            break;
        }
    }
    Ok(MoveSeq::new(e.clone(), moves))
}

/// Synthesizes a replayable move sequence from `source` to `target`.
///
/// Both expressions must carry the same set of variables, each appearing
/// exactly once; unit leaves may differ freely. The sequence normalizes the
/// source (strip units, right-associate, sort into the target's leaf
/// order), then replays the target's own normalization backwards.
pub fn synthesize(source: &Expr, target: &Expr) -> Result<MoveSeq, OperadError> {
    if !source.has_distinct_vars() {
        return Err(OperadError::LabelMismatch(format!("{source} repeats a variable")));
    }
    if !target.has_distinct_vars() {
        return Err(OperadError::LabelMismatch(format!("{target} repeats a variable")));
    }
    if source.var_set() != target.var_set() {
        return Err(OperadError::LabelMismatch(format!(
            "variable sets differ: {:?} vs {:?}",
            source.var_set(),
            target.var_set()
        )));
    }

    // With no variables at all, elimination leaves the bare unit leaf, which
    // is already the normal form; rotation applies only to variable combs.
    let to_comb = |e: &Expr| -> MoveSeq {
        if *e == Expr::Unit {
            MoveSeq::new(e.clone(), Vec::new())
        } else {
            right_associate(e).expect("stripped of units")
        }
    };

    let mut moves = Vec::new();
    let strip = eliminate_units(source);
    let stripped = strip.replay().expect("unit elimination always replays");
    moves.extend(strip.moves);
    let assoc = to_comb(&stripped);
    let comb = assoc.replay().expect("rotations always replay");
    moves.extend(assoc.moves);

    let sort = sort_leaves(&comb, &target.var_indices())?;
    let sorted = sort.replay().expect("sort moves always replay");
    moves.extend(sort.moves);

    let t_strip = eliminate_units(target);
    let t_stripped = t_strip.replay().expect("unit elimination always replays");
    let t_assoc = to_comb(&t_stripped);
    debug_assert_eq!(sorted, t_assoc.replay().expect("rotations always replay"));
    moves.extend(t_assoc.moves.iter().rev().map(Move::inverse));
    moves.extend(t_strip.moves.iter().rev().map(Move::inverse));

    Ok(MoveSeq::new(source.clone(), moves))
}

/// Exhaustive contract check for the synthesizer over all ordered pairs of
/// expressions with the variable sets `{}`, `{x1}`, …, `{x1..x<max_vars>}`
/// and at most `max_units` unit leaves each: exact replay, agreement of the
/// tracked bijection with label matching, round-trip to the identity, and
/// the polynomial move-count bound.
pub fn check_coherence_corpus(
    max_vars: usize,
    max_units: usize,
    limit: usize,
) -> Result<Report, crate::laws::Overflow> {
    let mut report = Report::new("coherence-corpus".to_string())
        .with_param("max_vars", max_vars)
        .with_param("max_units", max_units)
        .with_param("limit", limit);
    for k in 0..=max_vars {
        let pool = crate::expr::all_exprs(k, max_units);
        for (i, s) in pool.iter().enumerate() {
            for t in &pool[i..] {
                check_pair(&mut report, k, s, t);
                if report.total() > limit {
                    return Err(crate::laws::Overflow { counted: report.total(), limit });
                }
            }
        }
    }
    Ok(report)
}

fn check_pair(report: &mut Report, vars: usize, s: &Expr, t: &Expr) {
    let operands = |a: &Expr, b: &Expr| {
        let (a, b) = (a.clone(), b.clone());
        move || format!("{a} => {b}")
    };
    let forward = synthesize(s, t).expect("same variable set by construction");
    let backward = synthesize(t, s).expect("same variable set by construction");
    report.check("replay-exact", operands(s, t), t, &forward.replay().expect("synthesized"));
    report.check("replay-exact", operands(t, s), s, &backward.replay().expect("synthesized"));

    let fwd = moveseq_bijection(&forward).expect("replay succeeded");
    let bwd = moveseq_bijection(&backward).expect("replay succeeded");
    report.check(
        "bijection-label-match",
        operands(s, t),
        &label_bijection(s, t).expect("same variable set"),
        &fwd,
    );
    report.check(
        "bijection-label-match",
        operands(t, s),
        &label_bijection(t, s).expect("same variable set"),
        &bwd,
    );

    let n = vars;
    report.check(
        "round-trip-identity",
        operands(s, t),
        &Permutation::identity(n),
        &bwd.compose(&fwd).expect("equal degrees"),
    );
    report.check(
        "round-trip-identity",
        operands(t, s),
        &Permutation::identity(n),
        &fwd.compose(&bwd).expect("equal degrees"),
    );

    let bound = 2 * n * n + 4 * s.unit_count().max(t.unit_count());
    for (seq, from, to) in [(&forward, s, t), (&backward, t, s)] {
        report.check_bool(
            "move-count-bound",
            operands(from, to),
            || format!("{} moves > bound {bound}", seq.len()),
            seq.len() <= bound,
        );
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn e(s: &str) -> Expr {
        s.parse().unwrap()
    }

    fn kinds(s: &MoveSeq) -> Vec<MoveKind> {
        s.moves.iter().map(|m| m.kind).collect()
    }

    #[test]
    fn moves_rewrite_in_place() {
        let alpha = Move::new(MoveKind::Alpha, vec![]);
        assert_eq!(apply_move(&e("((x1*x2)*x3)"), &alpha).unwrap(), e("(x1*(x2*x3))"));
        let tau = Move::new(MoveKind::Tau, vec![]);
        assert_eq!(apply_move(&e("(x1*x2)"), &tau).unwrap(), e("(x2*x1)"));
        let eta_l = Move::new(MoveKind::EtaL, vec![]);
        assert_eq!(apply_move(&e("(I*x1)"), &eta_l).unwrap(), e("x1"));
        let nested = Move::new(MoveKind::EtaR, vec![Dir::L]);
        assert_eq!(apply_move(&e("((x1*I)*x2)"), &nested).unwrap(), e("(x1*x2)"));
    }

    #[test]
    fn moves_reject_bad_shapes_and_paths() {
        let alpha = Move::new(MoveKind::Alpha, vec![]);
        assert!(apply_move(&e("(x1*(x2*x3))"), &alpha).is_err());
        let deep = Move::new(MoveKind::Tau, vec![Dir::R, Dir::R]);
        assert!(apply_move(&e("(x1*x2)"), &deep).is_err());
        let eta_l = Move::new(MoveKind::EtaL, vec![]);
        assert!(apply_move(&e("(x1*I)"), &eta_l).is_err());
    }

    #[test]
    fn inverse_moves_undo() {
        let x = e("((x1*x2)*(I*x3))");
        for kind in [MoveKind::Alpha, MoveKind::Tau, MoveKind::EtaRInv, MoveKind::EtaLInv] {
            let m = Move::new(kind, vec![]);
            let there = apply_move(&x, &m).unwrap();
            assert_eq!(apply_move(&there, &m.inverse()).unwrap(), x);
        }
        let m = Move::new(MoveKind::EtaL, vec![Dir::R]);
        let there = apply_move(&x, &m).unwrap();
        assert_eq!(apply_move(&there, &m.inverse()).unwrap(), x);
    }

    #[test]
    fn unit_elimination_is_innermost_first() {
        let s = eliminate_units(&e("(I*x1)"));
        assert_eq!(kinds(&s), vec![MoveKind::EtaL]);
        assert_eq!(s.replay().unwrap(), e("x1"));

        let s = eliminate_units(&e("((x1*I)*I)"));
        assert_eq!(kinds(&s), vec![MoveKind::EtaR, MoveKind::EtaR]);
        assert_eq!(s.moves[0].path, vec![Dir::L]);
        assert_eq!(s.moves[1].path, Vec::<Dir>::new());
        assert_eq!(s.replay().unwrap(), e("x1"));

        let s = eliminate_units(&e("I"));
        assert!(s.is_empty());
        assert_eq!(s.replay().unwrap(), e("I"));

        // An all-unit tensor collapses to a single unit leaf.
        let s = eliminate_units(&e("(I*(I*I))"));
        assert_eq!(s.replay().unwrap(), e("I"));
    }

    #[test]
    fn right_association_matches_examples() {
        let s = right_associate(&e("((x1*x2)*x3)")).unwrap();
        assert_eq!(kinds(&s), vec![MoveKind::Alpha]);
        assert_eq!(s.replay().unwrap(), e("(x1*(x2*x3))"));

        let s = right_associate(&e("(((x1*x2)*x3)*x4)")).unwrap();
        assert_eq!(s.len(), 3);
        assert!(kinds(&s).iter().all(|k| *k == MoveKind::Alpha));
        assert_eq!(s.replay().unwrap(), e("(x1*(x2*(x3*x4)))"));

        assert!(right_associate(&e("x1")).unwrap().is_empty());
        assert!(right_associate(&e("(x1*I)")).is_err());
    }

    #[test]
    fn sorting_uses_conjugated_swaps() {
        let s = sort_leaves(&e("(x2*x1)"), &[1, 2]).unwrap();
        assert_eq!(kinds(&s), vec![MoveKind::Tau]);
        assert_eq!(s.replay().unwrap(), e("(x1*x2)"));

        let s = sort_leaves(&e("(x2*(x1*x3))"), &[1, 2, 3]).unwrap();
        assert_eq!(kinds(&s), vec![MoveKind::AlphaInv, MoveKind::Tau, MoveKind::Alpha]);
        assert_eq!(s.moves[1].path, vec![Dir::L]);
        assert_eq!(s.replay().unwrap(), e("(x1*(x2*x3))"));

        assert!(sort_leaves(&e("(x1*(x2*x3))"), &[1, 2, 3]).unwrap().is_empty());
        assert!(sort_leaves(&e("(x1*x2)"), &[1, 3]).is_err());
    }

    #[test]
    fn synthesis_matches_small_cases() {
        let s = synthesize(&e("((x1*x2)*x3)"), &e("(x1*(x2*x3))")).unwrap();
        assert_eq!(kinds(&s), vec![MoveKind::Alpha]);

        let s = synthesize(&e("(x2*x1)"), &e("(x1*x2)")).unwrap();
        assert_eq!(kinds(&s), vec![MoveKind::Tau]);

        let s = synthesize(&e("(I*x1)"), &e("(x1*I)")).unwrap();
        assert_eq!(kinds(&s), vec![MoveKind::EtaL, MoveKind::EtaRInv]);
        assert_eq!(s.replay().unwrap(), e("(x1*I)"));

        let s = synthesize(&e("I"), &e("I")).unwrap();
        assert!(s.is_empty());
    }

    #[test]
    fn synthesis_rejects_mismatched_inputs() {
        assert!(synthesize(&e("x1"), &e("x2")).is_err());
        assert!(synthesize(&e("(x1*x1)"), &e("(x1*x1)")).is_err());
    }

    #[test]
    fn bijection_tracks_leaves() {
        let tau = MoveSeq::new(e("(x1*x2)"), vec![Move::new(MoveKind::Tau, vec![])]);
        assert_eq!(moveseq_bijection(&tau).unwrap().one_based_images(), vec![2, 1]);

        let alpha = MoveSeq::new(e("((x1*x2)*x3)"), vec![Move::new(MoveKind::Alpha, vec![])]);
        assert!(moveseq_bijection(&alpha).unwrap().is_identity());

        let s = synthesize(&e("(x2*x1)"), &e("(x1*x2)")).unwrap();
        let b = moveseq_bijection(&s).unwrap();
        assert_eq!(b, label_bijection(&e("(x2*x1)"), &e("(x1*x2)")).unwrap());
    }

    #[test]
    fn eta_moves_stay_in_the_outer_phases() {
        // Strategy shape: η kinds may open the sequence (stripping the
        // source) and close it (rebuilding the target), never in between.
        let s = synthesize(&e("((I*x2)*x1)"), &e("(x1*(x2*I))")).unwrap();
        let ks = kinds(&s);
        let is_eta = |k: &MoveKind| {
            matches!(k, MoveKind::EtaL | MoveKind::EtaLInv | MoveKind::EtaR | MoveKind::EtaRInv)
        };
        let first_mid = ks.iter().position(|k| !is_eta(k));
        let last_mid = ks.iter().rposition(|k| !is_eta(k));
        if let (Some(a), Some(b)) = (first_mid, last_mid) {
            assert!(!ks[a..=b].iter().any(is_eta), "eta inside the middle: {ks:?}");
        }
        assert_eq!(s.replay().unwrap(), e("(x1*(x2*I))"));
    }

    #[test]
    fn serialization_shape() {
        let s = synthesize(&e("(I*x1)"), &e("x1")).unwrap();
        let json = serde_json::to_string(&s).unwrap();
        assert_eq!(json, r#"{"source":"(I*x1)","moves":[{"kind":"eta_l","path":""}]}"#);
        let m = Move::new(MoveKind::AlphaInv, vec![Dir::R, Dir::L]);
        assert_eq!(serde_json::to_string(&m).unwrap(), r#"{"kind":"alpha_inv","path":"RL"}"#);
    }

    #[test]
    fn corpus_check_passes_at_two_variables() {
        let report = check_coherence_corpus(2, 1, 100_000).unwrap();
        assert!(report.all_pass(), "{}", report.summary());
        // 1 + 3 + 14 expressions over k = 0, 1, 2 give unordered pair counts
        // 1, 6, 105; eight checks per pair (four laws, both directions).
        assert_eq!(report.total(), 8 * (1 + 6 + 105));
    }
}
