//! The six structure diagrams — units, transposition, the hexagon, the
//! pentagon — and suites that check them, plus operad-compatibility of
//! algebra models.
//!
//! Each diagram is a pair of morphism paths with common endpoints, every
//! edge built from the four generator isomorphisms by operadic composition
//! and the symmetric action. At the categorical level both paths agree by
//! uniqueness of morphisms; the suites check they still agree after a model
//! turns each edge into a concrete item-tracking bijection.

use itertools::Itertools;

use crate::cat::{
    e_compose, e_object, mu_object, structure_morphisms, word_pool, y_mor_act, y_mor_gamma,
    y_operad, ExprModel, Word, WordModel, YMor, YModel, YOp,
};
use crate::expr::Expr;
use crate::laws::{ensure_limit, fmt_tuple, pools_by_measure, tuples_within, Overflow};
use crate::perm::Permutation;
use crate::report::Report;
use crate::tree::Tree;
use crate::view::{Operad, SymmetricOperad};

/// Two morphism paths with common endpoints. Paths list their edges in
/// application order: the first edge leaves the shared source.
pub struct Diagram {
    pub name: &'static str,
    pub left: Vec<YMor>,
    pub right: Vec<YMor>,
}

/// Composes a path of morphisms end to end.
fn chain(path: &[YMor]) -> YMor {
    let mut acc = path[0].clone();
    for m in &path[1..] {
        acc = e_compose(m, &acc).expect("diagram edges chain");
    }
    acc
}

impl Diagram {
    fn new(name: &'static str, left: Vec<YMor>, right: Vec<YMor>) -> Self {
        let l = chain(&left);
        let r = chain(&right);
        assert_eq!(l, r, "diagram `{name}` endpoints disagree");
        Diagram { name, left, right }
    }

    pub fn arity(&self) -> usize {
        self.left[0].degree()
    }

    pub fn source(&self) -> &YOp {
        &self.left[0].src
    }

    pub fn target(&self) -> &YOp {
        &self.left.last().expect("nonempty path").tgt
    }
}

/// Builds the six diagrams whose commutation pins down the structure:
/// both unit triangles, the involution of the transposition, the unit
/// coherence triangle, the hexagon, and the pentagon.
pub fn diagrams() -> Vec<Diagram> {
    let sm = structure_morphisms();
    let y = y_operad();
    let id_one = YMor::identity(&y.identity());
    let id_mu = YMor::identity(&mu_object());
    let id_e = YMor::identity(&e_object());
    let p = |images: &[usize]| Permutation::from_one_based(images.to_vec()).unwrap();

    // e⊗e -> e two ways: drop the right factor, or the left.
    let eta_r_e = y_mor_gamma(&sm.eta_r, &[id_e.clone()]);
    let eta_l_e = y_mor_gamma(&sm.eta_l, &[id_e.clone()]);
    let left_right_unit = Diagram::new(
        "left-right-unit",
        vec![eta_r_e.clone()],
        vec![YMor::identity(&eta_r_e.src), eta_l_e],
    );

    // a⊗e -> a directly, or across the transposition and e⊗a -> a.
    let tau_a_e = y_mor_gamma(&sm.tau, &[id_one.clone(), id_e.clone()]);
    let unit_transposition = Diagram::new(
        "unit-transposition",
        vec![sm.eta_r.clone()],
        vec![tau_a_e, sm.eta_l.clone()],
    );

    // (a⊗e)⊗b -> a⊗b directly, or through a⊗(e⊗b).
    let alpha_a_e_b = y_mor_gamma(&sm.alpha, &[id_one.clone(), id_e.clone(), id_one.clone()]);
    let eta_r_tensor_b = y_mor_gamma(&id_mu, &[sm.eta_r.clone(), id_one.clone()]);
    let a_tensor_eta_l = y_mor_gamma(&id_mu, &[id_one.clone(), sm.eta_l.clone()]);
    let unit_coherence = Diagram::new(
        "unit-coherence",
        vec![eta_r_tensor_b],
        vec![alpha_a_e_b, a_tensor_eta_l],
    );

    // Transposing twice is the identity.
    let tau_back = y_mor_act(&sm.tau, &p(&[2, 1]));
    let tau_squared = Diagram::new(
        "transposition-involution",
        vec![sm.tau.clone(), tau_back],
        vec![YMor::identity(&sm.tau.src)],
    );

    // Hexagon: move the first factor past the other two, one at a time or
    // as a block.
    let tau_a_bc = y_mor_gamma(&sm.tau, &[id_one.clone(), id_mu.clone()]);
    let alpha_bca = y_mor_act(&sm.alpha, &p(&[3, 1, 2]));
    let tau_tensor_c = y_mor_gamma(&id_mu, &[sm.tau.clone(), id_one.clone()]);
    let alpha_bac = y_mor_act(&sm.alpha, &p(&[2, 1, 3]));
    let b_tensor_tau = y_mor_act(
        &y_mor_gamma(&id_mu, &[id_one.clone(), sm.tau.clone()]),
        &p(&[2, 1, 3]),
    );
    let hexagon = Diagram::new(
        "hexagon",
        vec![sm.alpha.clone(), tau_a_bc, alpha_bca],
        vec![tau_tensor_c, alpha_bac, b_tensor_tau],
    );

    // Pentagon: the two reassociation routes from (((a⊗b)⊗c)⊗d).
    let alpha_ab_c_d = y_mor_gamma(&sm.alpha, &[id_mu.clone(), id_one.clone(), id_one.clone()]);
    let alpha_a_b_cd = y_mor_gamma(&sm.alpha, &[id_one.clone(), id_one.clone(), id_mu.clone()]);
    let alpha_tensor_d = y_mor_gamma(&id_mu, &[sm.alpha.clone(), id_one.clone()]);
    let alpha_a_bc_d = y_mor_gamma(&sm.alpha, &[id_one.clone(), id_mu.clone(), id_one.clone()]);
    let a_tensor_alpha = y_mor_gamma(&id_mu, &[id_one.clone(), sm.alpha.clone()]);
    let pentagon = Diagram::new(
        "pentagon",
        vec![alpha_ab_c_d, alpha_a_b_cd],
        vec![alpha_tensor_d, alpha_a_bc_d, a_tensor_alpha],
    );

    vec![
        left_right_unit,
        unit_transposition,
        unit_coherence,
        tau_squared,
        hexagon,
        pentagon,
    ]
}

/// Evaluates a path at concrete inputs, composing the edge bijections.
fn path_value<M: YModel>(model: &M, path: &[YMor], inputs: &[M::Obj]) -> M::Mor {
    let mut acc = model.morphism(&path[0], inputs);
    for m in &path[1..] {
        let next = model.morphism(m, inputs);
        acc = model.compose(&next, &acc).expect("diagram edges chain in the model");
    }
    acc
}

fn run_diagrams<M, F>(
    model: &M,
    tuples_for: F,
    mut report: Report,
    limit: usize,
) -> Result<Report, Overflow>
where
    M: YModel,
    F: Fn(usize) -> Vec<Vec<M::Obj>>,
{
    for d in diagrams() {
        for inputs in tuples_for(d.arity()) {
            let lhs = path_value(model, &d.left, &inputs);
            let rhs = path_value(model, &d.right, &inputs);
            report.check(d.name, || fmt_tuple(&inputs), &rhs, &lhs);
        }
        ensure_limit(&report, limit)?;
    }
    Ok(report)
}

/// Checks all six diagrams on the word model over words of length at most
/// `max_len` in the first `alphabet` letters.
pub fn check_diagrams_word(
    alphabet: usize,
    max_len: usize,
    limit: usize,
) -> Result<Report, Overflow> {
    let pool = word_pool(alphabet, max_len);
    let report = Report::new("diagrams(word)")
        .with_param("alphabet", alphabet)
        .with_param("max-len", max_len);
    run_diagrams(&WordModel, |arity| obj_tuples(&pool, arity), report, limit)
}

/// Checks all six diagrams on the expression model, feeding each diagram
/// input a parenthesized block of fresh variables, at most `max_leaves`
/// variables in total.
pub fn check_diagrams_expr(max_leaves: usize, limit: usize) -> Result<Report, Overflow> {
    let report = Report::new("diagrams(expression)").with_param("max-leaves", max_leaves);
    run_diagrams(&ExprModel, |arity| expr_tuples(arity, max_leaves), report, limit)
}

/// All `arity`-tuples over a pool.
fn obj_tuples<T: Clone>(pool: &[T], arity: usize) -> Vec<Vec<T>> {
    if arity == 0 {
        return vec![Vec::new()];
    }
    (0..arity)
        .map(|_| pool.iter().cloned())
        .multi_cartesian_product()
        .collect()
}

/// Length-`arity` vectors of positive sizes summing to at most `total_max`.
fn compositions(arity: usize, total_max: usize) -> Vec<Vec<usize>> {
    fn go(arity: usize, left: usize, current: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if arity == 0 {
            out.push(current.clone());
            return;
        }
        // Leave at least one leaf for each remaining position.
        for s in 1..=left.saturating_sub(arity - 1) {
            current.push(s);
            go(arity - 1, left - s, current, out);
            current.pop();
        }
    }
    let mut out = Vec::new();
    go(arity, total_max, &mut Vec::new(), &mut out);
    out
}

/// Input tuples for the expression model: every way to hand each of the
/// `arity` inputs a fully parenthesized block of fresh variables, using at
/// most `max_leaves` variables in total. Variables are numbered left to
/// right, so distinct inputs never share a label.
pub fn expr_tuples(arity: usize, max_leaves: usize) -> Vec<Vec<Expr>> {
    if arity == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for sizes in compositions(arity, max_leaves) {
        let mut offset = 1usize;
        let mut candidates: Vec<Vec<Expr>> = Vec::with_capacity(arity);
        for &s in &sizes {
            let vars: Vec<Expr> = (offset..offset + s).map(Expr::Var).collect();
            candidates.push(
                Tree::enumerate(s)
                    .iter()
                    .map(|shape| Expr::from_shape(shape, &vars))
                    .collect(),
            );
            offset += s;
        }
        out.extend(
            candidates
                .iter()
                .map(|c| c.iter().cloned())
                .multi_cartesian_product(),
        );
    }
    out
}

/// All morphisms between elements of `pool` (every ordered same-degree
/// pair).
fn morphism_pool(pool: &[YOp]) -> Vec<YMor> {
    let y = y_operad();
    let mut out = Vec::new();
    for a in pool {
        for b in pool {
            if y.degree(a) == y.degree(b) {
                out.push(YMor { src: a.clone(), tgt: b.clone() });
            }
        }
    }
    out
}

/// Argument-morphism tuples for an outer morphism: `len` morphisms whose
/// source measures fit `src_budget`, target measures fit `tgt_budget`, and
/// whose degrees sum to at most `degree_budget`.
fn mor_tuples(
    pool: &[YMor],
    len: usize,
    src_budget: usize,
    tgt_budget: usize,
    degree_budget: usize,
) -> Vec<Vec<YMor>> {
    fn go(
        pool: &[YMor],
        y: &crate::sym::FreeSymOperad<crate::view::ZOperad>,
        len: usize,
        bs: usize,
        bt: usize,
        bd: usize,
        current: &mut Vec<YMor>,
        out: &mut Vec<Vec<YMor>>,
    ) {
        if len == 0 {
            out.push(current.clone());
            return;
        }
        for m in pool {
            let (ms, mt, d) = (y.measure(&m.src), y.measure(&m.tgt), m.degree());
            if ms <= bs && mt <= bt && d <= bd {
                current.push(m.clone());
                go(pool, y, len - 1, bs - ms, bt - mt, bd - d, current, out);
                current.pop();
            }
        }
    }
    let y = y_operad();
    let mut out = Vec::new();
    go(
        pool,
        &y,
        len,
        src_budget,
        tgt_budget,
        degree_budget,
        &mut Vec::with_capacity(len),
        &mut out,
    );
    out
}

/// Checks that a model's action is compatible with the operad structure on
/// objects and morphisms: composition and the symmetric action commute
/// with evaluation, morphism composition factors through the interchange
/// decomposition, and composing morphisms then acting equals acting then
/// composing. Operations range over elements with internal measure at most
/// `internal_bound` and degree at most `arity_bound`; carrier inputs range
/// over `inputs`.
pub fn check_algebra_gamma_compat<M: YModel>(
    model: &M,
    inputs: &[M::Obj],
    internal_bound: usize,
    arity_bound: usize,
    limit: usize,
) -> Result<Report, Overflow> {
    let y = y_operad();
    let mut report = Report::new(format!("algebra({})", model.name()))
        .with_param("internal-bound", internal_bound)
        .with_param("arity-bound", arity_bound)
        .with_param("inputs", inputs.len());

    let ops: Vec<YOp> = y
        .elements_up_to(internal_bound)
        .into_iter()
        .filter(|e| y.degree(e) <= arity_bound)
        .collect();
    let pools = pools_by_measure(&y, internal_bound);

    // Evaluation turns operad composition into nested application.
    for outer in &ops {
        let n = y.degree(outer);
        let budget = internal_bound.saturating_sub(y.measure(outer) - n);
        let arg_tuples = tuples_within(&pools, n, budget, limit)?;
        for args in &arg_tuples {
            let total: usize = args.iter().map(|a| y.degree(a)).sum();
            if total > arity_bound {
                continue;
            }
            let composite = y.gamma(outer, args);
            for ws in obj_tuples(inputs, total) {
                let lhs = model.object(&composite, &ws);
                let mut offset = 0;
                let parts: Vec<M::Obj> = args
                    .iter()
                    .map(|a| {
                        let d = y.degree(a);
                        let part = model.object(a, &ws[offset..offset + d]);
                        offset += d;
                        part
                    })
                    .collect();
                let rhs = model.object(outer, &parts);
                report.check(
                    "object-gamma",
                    || format!("{} ∘ {} @ {}", outer, fmt_tuple(args), fmt_tuple(&ws)),
                    &rhs,
                    &lhs,
                );
            }
        }
        ensure_limit(&report, limit)?;
    }

    // Evaluation respects the symmetric action: acting on the operation is
    // reordering the inputs.
    for op in &ops {
        let n = y.degree(op);
        for s in Permutation::all(n) {
            for ws in obj_tuples(inputs, n) {
                let lhs = model.object(&y.act(op, &s), &ws);
                let rhs = model.object(op, &s.apply_to_slice(&ws).expect("degree matches"));
                report.check(
                    "object-equivariance",
                    || format!("{} · {} @ {}", op, s, fmt_tuple(&ws)),
                    &rhs,
                    &lhs,
                );
            }
        }
        ensure_limit(&report, limit)?;
    }

    let mors = morphism_pool(&ops);

    // Morphism composition factors through the interchange decomposition:
    // compose the arguments first, then the outer morphism.
    for outer in &mors {
        let n = outer.degree();
        let bs = internal_bound.saturating_sub(y.measure(&outer.src) - n);
        let bt = internal_bound.saturating_sub(y.measure(&outer.tgt) - n);
        for args in mor_tuples(&mors, n, bs, bt, arity_bound) {
            let total: usize = args.iter().map(YMor::degree).sum();
            let srcs: Vec<YMor> = args.iter().map(|a| YMor::identity(&a.src)).collect();
            let tgts: Vec<YMor> = args.iter().map(|a| YMor::identity(&a.tgt)).collect();
            let args_first = y_mor_gamma(&YMor::identity(&outer.src), &args);
            let outer_last = y_mor_gamma(outer, &tgts);
            debug_assert_eq!(
                y_mor_gamma(outer, &srcs).src,
                args_first.src,
                "interchange endpoints"
            );
            for ws in obj_tuples(inputs, total) {
                let lhs = model.morphism(&y_mor_gamma(outer, &args), &ws);
                let rhs = model
                    .compose(&model.morphism(&outer_last, &ws), &model.morphism(&args_first, &ws))
                    .expect("interchange factors chain");
                report.check(
                    "morphism-gamma",
                    || format!("({}) ∘ {} @ {}", outer, fmt_tuple(&args), fmt_tuple(&ws)),
                    &rhs,
                    &lhs,
                );
            }
        }
        ensure_limit(&report, limit)?;
    }

    // The symmetric action on morphisms is input reordering.
    for m in &mors {
        let n = m.degree();
        for s in Permutation::all(n) {
            for ws in obj_tuples(inputs, n) {
                let lhs = model.morphism(&y_mor_act(m, &s), &ws);
                let rhs = model.morphism(m, &s.apply_to_slice(&ws).expect("degree matches"));
                report.check(
                    "morphism-equivariance",
                    || format!("({}) · {} @ {}", m, s, fmt_tuple(&ws)),
                    &rhs,
                    &lhs,
                );
            }
        }
        ensure_limit(&report, limit)?;
    }

    // Evaluating a composite of morphisms is composing the evaluations.
    let mut by_degree: Vec<Vec<&YOp>> = vec![Vec::new(); arity_bound + 1];
    for op in &ops {
        by_degree[y.degree(op)].push(op);
    }
    for pool in &by_degree {
        for a in pool {
            for b in pool {
                for c in pool {
                    let f = YMor { src: (*a).clone(), tgt: (*b).clone() };
                    let g = YMor { src: (*b).clone(), tgt: (*c).clone() };
                    let gf = e_compose(&g, &f).expect("endpoints meet");
                    for ws in obj_tuples(inputs, f.degree()) {
                        let lhs = model.morphism(&gf, &ws);
                        let rhs = model
                            .compose(&model.morphism(&g, &ws), &model.morphism(&f, &ws))
                            .expect("evaluations chain");
                        report.check(
                            "functoriality",
                            || format!("({}) ∘ ({}) @ {}", g, f, fmt_tuple(&ws)),
                            &rhs,
                            &lhs,
                        );
                    }
                }
            }
            ensure_limit(&report, limit)?;
        }
    }

    Ok(report)
}

/// The compatibility suite on the word model with its standard input pool.
pub fn check_word_algebra(
    alphabet: usize,
    max_len: usize,
    internal_bound: usize,
    arity_bound: usize,
    limit: usize,
) -> Result<Report, Overflow> {
    let pool: Vec<Word> = word_pool(alphabet, max_len);
    check_algebra_gamma_compat(&WordModel, &pool, internal_bound, arity_bound, limit)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cat::yop_text;

    #[test]
    fn six_diagrams_with_expected_shapes() {
        let ds = diagrams();
        let names: Vec<&str> = ds.iter().map(|d| d.name).collect();
        assert_eq!(
            names,
            vec![
                "left-right-unit",
                "unit-transposition",
                "unit-coherence",
                "transposition-involution",
                "hexagon",
                "pentagon"
            ]
        );
        let arities: Vec<usize> = ds.iter().map(Diagram::arity).collect();
        assert_eq!(arities, vec![0, 1, 2, 2, 3, 4]);
    }

    #[test]
    fn hexagon_corners_are_the_expected_objects() {
        let ds = diagrams();
        let hexagon = &ds[4];
        assert_eq!(yop_text(hexagon.source()), "[((1,1),1);{1,2,3}] | [1,2,3]");
        assert_eq!(yop_text(hexagon.target()), "[(1,(1,1));{1,2,3}] | [3,1,2]");
        // The two routes pass through different intermediate objects.
        assert_eq!(
            yop_text(&hexagon.left[1].tgt),
            "[((1,1),1);{1,2,3}] | [3,1,2]"
        );
        assert_eq!(
            yop_text(&hexagon.right[0].tgt),
            "[((1,1),1);{1,2,3}] | [2,1,3]"
        );
    }

    #[test]
    fn pentagon_corners_are_the_five_shapes() {
        let ds = diagrams();
        let pentagon = &ds[5];
        assert_eq!(
            yop_text(pentagon.source()),
            "[(((1,1),1),1);{1,2,3,4}] | [1,2,3,4]"
        );
        assert_eq!(
            yop_text(pentagon.target()),
            "[(1,(1,(1,1)));{1,2,3,4}] | [1,2,3,4]"
        );
        assert_eq!(
            yop_text(&pentagon.left[0].tgt),
            "[((1,1),(1,1));{1,2,3,4}] | [1,2,3,4]"
        );
        assert_eq!(
            yop_text(&pentagon.right[0].tgt),
            "[((1,(1,1)),1);{1,2,3,4}] | [1,2,3,4]"
        );
        assert_eq!(
            yop_text(&pentagon.right[1].tgt),
            "[(1,((1,1),1));{1,2,3,4}] | [1,2,3,4]"
        );
    }

    #[test]
    fn word_diagrams_commute_on_small_pool() {
        let report = check_diagrams_word(2, 2, crate::laws::WIDE_LIMIT).unwrap();
        assert!(report.all_pass(), "{}", report.summary());
        // 1 + 7 + 49 + 49 + 343 + 2401 input tuples over a 7-word pool.
        assert_eq!(report.total(), 2850);
    }

    #[test]
    fn expr_diagrams_commute_on_small_blocks() {
        let report = check_diagrams_expr(4, crate::laws::WIDE_LIMIT).unwrap();
        assert!(report.all_pass(), "{}", report.summary());
        assert_eq!(report.total(), 1 + 9 + 8 + 8 + 4 + 1);
    }

    #[test]
    fn expr_tuples_use_disjoint_consecutive_variables() {
        let tuples = expr_tuples(2, 4);
        assert_eq!(tuples.len(), 8);
        for t in &tuples {
            let mut labels = Vec::new();
            for e in t {
                labels.extend(e.var_indices());
            }
            let n = labels.len();
            assert!(n <= 4);
            assert_eq!(labels, (1..=n).collect::<Vec<_>>());
        }
    }

    #[test]
    fn word_algebra_compat_small() {
        let report = check_word_algebra(2, 2, 2, 2, crate::laws::WIDE_LIMIT).unwrap();
        assert!(report.all_pass(), "{}", report.summary());
        let laws: Vec<&str> = report.stats.iter().map(|s| s.law.as_str()).collect();
        assert_eq!(
            laws,
            vec![
                "object-gamma",
                "object-equivariance",
                "morphism-gamma",
                "morphism-equivariance",
                "functoriality",
            ]
        );
        for s in &report.stats {
            assert!(s.total > 0, "law `{}` never ran", s.law);
        }
    }

    #[test]
    fn expr_algebra_compat_small() {
        let vars: Vec<Expr> = vec![
            "x1".parse().unwrap(),
            "(x2*x3)".parse().unwrap(),
        ];
        let report =
            check_algebra_gamma_compat(&ExprModel, &vars, 2, 2, crate::laws::WIDE_LIMIT).unwrap();
        assert!(report.all_pass(), "{}", report.summary());
    }
}
