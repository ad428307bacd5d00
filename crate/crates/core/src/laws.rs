//! Exhaustive law suites: operad axioms, symmetric equivariance, and
//! structure preservation of operad maps.
//!
//! Each suite enumerates every instance of its laws whose operands fit under
//! a size bound, using the measure additivity documented on
//! [`Operad::measure`] to prune tuples whose composite would overflow the
//! bound. Suites refuse to run past a configured instance ceiling instead of
//! silently taking forever. The [`mutant`] module supplies deliberately
//! broken views used to demonstrate that the suites actually detect
//! corruption.

use itertools::Itertools;
use thiserror::Error;

use crate::perm::Permutation;
use crate::report::Report;
use crate::view::{Operad, SymmetricOperad};

/// Ceiling generous enough for every suite the acceptance tests run.
pub const WIDE_LIMIT: usize = 100_000_000;

/// Raised when a suite would enumerate more instances than allowed.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("exhaustive enumeration exceeds the configured ceiling ({counted} > {limit})")]
pub struct Overflow {
    pub counted: usize,
    pub limit: usize,
}

pub(crate) fn ensure_limit(report: &Report, limit: usize) -> Result<(), Overflow> {
    if report.total() > limit {
        Err(Overflow { counted: report.total(), limit })
    } else {
        Ok(())
    }
}

/// Elements grouped by measure: `pools[m]` holds the measure-`m` elements.
pub(crate) fn pools_by_measure<O: Operad>(view: &O, bound: usize) -> Vec<Vec<O::Elem>> {
    let mut pools = vec![Vec::new(); bound + 1];
    for e in view.elements_up_to(bound) {
        let m = view.measure(&e);
        debug_assert!(m <= bound, "enumeration produced an oversized element");
        pools[m].push(e);
    }
    pools
}

/// All argument tuples of the given length whose measures sum to at most
/// `budget`, ordered by measure then pool order.
pub(crate) fn tuples_within<E: Clone>(
    pools: &[Vec<E>],
    len: usize,
    budget: usize,
    cap: usize,
) -> Result<Vec<Vec<E>>, Overflow> {
    fn go<E: Clone>(
        pools: &[Vec<E>],
        len: usize,
        budget: usize,
        current: &mut Vec<E>,
        out: &mut Vec<Vec<E>>,
        cap: usize,
    ) -> Result<(), Overflow> {
        if len == 0 {
            if out.len() >= cap {
                return Err(Overflow { counted: out.len() + 1, limit: cap });
            }
            out.push(current.clone());
            return Ok(());
        }
        for m in 0..=budget.min(pools.len() - 1) {
            for e in &pools[m] {
                current.push(e.clone());
                go(pools, len - 1, budget - m, current, out, cap)?;
                current.pop();
            }
        }
        Ok(())
    }
    let mut out = Vec::new();
    go(pools, len, budget, &mut Vec::with_capacity(len), &mut out, cap)?;
    Ok(out)
}

/// Remaining measure available to arguments of `outer` if the composite is
/// to stay within `bound`.
pub(crate) fn arg_budget<O: Operad>(view: &O, outer: &O::Elem, bound: usize) -> usize {
    bound.saturating_sub(view.measure(outer).saturating_sub(view.degree(outer)))
}

pub(crate) fn fmt_tuple<E: std::fmt::Display>(items: &[E]) -> String {
    format!("[{}]", items.iter().join(","))
}

/// Checks the non-symmetric operad axioms — unit laws and the interchange
/// form of associativity — on every composition whose result measure stays
/// within `bound`.
pub fn check_nonsym_axioms<O: Operad>(
    view: &O,
    bound: usize,
    limit: usize,
) -> Result<Report, Overflow> {
    let mut report = Report::new(format!("nonsym[{}]", view.name()))
        .with_param("bound", bound)
        .with_param("limit", limit);
    let elems = view.elements_up_to(bound);
    let pools = pools_by_measure(view, bound);
    let e = view.identity();

    for x in &elems {
        let left = view.gamma(&e, std::slice::from_ref(x));
        report.check("left-unit", || x.to_string(), x, &left);
        let ids = vec![e.clone(); view.degree(x)];
        let right = view.gamma(x, &ids);
        report.check("right-unit", || x.to_string(), x, &right);
        ensure_limit(&report, limit)?;
    }

    for outer in &elems {
        let n = view.degree(outer);
        let ys_tuples = tuples_within(&pools, n, arg_budget(view, outer, bound), limit + 1)?;
        for ys in &ys_tuples {
            let mid = view.gamma(outer, ys);
            let expected_degree: usize = ys.iter().map(|y| view.degree(y)).sum();
            report.check(
                "degree-additivity",
                || format!("{outer} ; {}", fmt_tuple(ys)),
                &expected_degree,
                &view.degree(&mid),
            );
            ensure_limit(&report, limit)?;
            if view.degree(&mid) != expected_degree {
                // The argument blocks below would be misaligned; the failure
                // is already on record.
                continue;
            }
            let zs_tuples =
                tuples_within(&pools, view.degree(&mid), arg_budget(view, &mid, bound), limit + 1)?;
            for zs in &zs_tuples {
                let joined = view.gamma(&mid, zs);
                let mut inner = Vec::with_capacity(n);
                let mut offset = 0;
                for y in ys {
                    let k = view.degree(y);
                    inner.push(view.gamma(y, &zs[offset..offset + k]));
                    offset += k;
                }
                let nested = view.gamma(outer, &inner);
                report.check(
                    "associativity",
                    || format!("{outer} ; {} ; {}", fmt_tuple(ys), fmt_tuple(zs)),
                    &joined,
                    &nested,
                );
                ensure_limit(&report, limit)?;
            }
        }
    }
    Ok(report)
}

/// Checks the symmetric-operad layer: that the group actions are actions,
/// and the two equivariance identities tying them to composition — the
/// outer permutation resurfaces as a block permutation (block sizes in
/// original argument order), and argument permutations collect into a
/// direct sum.
pub fn check_sym_axioms<O: SymmetricOperad>(
    view: &O,
    bound: usize,
    limit: usize,
) -> Result<Report, Overflow> {
    let mut report = Report::new(format!("sym[{}]", view.name()))
        .with_param("bound", bound)
        .with_param("limit", limit);
    let elems = view.elements_up_to(bound);
    let pools = pools_by_measure(view, bound);

    for x in &elems {
        let n = view.degree(x);
        let id = Permutation::identity(n);
        report.check("act-identity", || x.to_string(), x, &view.act(x, &id));
        ensure_limit(&report, limit)?;
        let perms = Permutation::all(n);
        for s in &perms {
            for r in &perms {
                let staged = view.act(&view.act(x, s), r);
                let fused = view.act(x, &s.compose(r).expect("equal degrees"));
                report.check("act-composition", || format!("{x} ; {s} ; {r}"), &fused, &staged);
                ensure_limit(&report, limit)?;
            }
        }
    }

    for outer in &elems {
        let n = view.degree(outer);
        let ys_tuples = tuples_within(&pools, n, arg_budget(view, outer, bound), limit + 1)?;
        for ys in &ys_tuples {
            let sizes: Vec<usize> = ys.iter().map(|y| view.degree(y)).collect();
            let total: usize = sizes.iter().sum();
            let plain = view.gamma(outer, ys);
            report.check(
                "degree-additivity",
                || format!("{outer} ; {}", fmt_tuple(ys)),
                &total,
                &view.degree(&plain),
            );
            ensure_limit(&report, limit)?;
            if view.degree(&plain) != total {
                continue;
            }

            // Outer equivariance: acting on the outer element permutes the
            // arguments and leaves a block permutation behind.
            for s in Permutation::all(n) {
                let lhs = view.gamma(&view.act(outer, &s), ys);
                let reordered = s.apply_to_slice(ys).expect("degree matches");
                let block = s.block(&sizes).expect("sizes match degree");
                let rhs = view.act(&view.gamma(outer, &reordered), &block);
                report.check(
                    "equivariance-outer",
                    || format!("{outer} ; {s} ; {}", fmt_tuple(ys)),
                    &rhs,
                    &lhs,
                );
                ensure_limit(&report, limit)?;
            }

            // Argument equivariance: acting on the arguments collects into
            // a direct sum.
            let per_arg: Vec<Vec<Permutation>> =
                sizes.iter().map(|&k| Permutation::all(k)).collect();
            for taus in per_arg.iter().multi_cartesian_product() {
                let acted: Vec<O::Elem> =
                    ys.iter().zip(&taus).map(|(y, t)| view.act(y, t)).collect();
                let lhs = view.gamma(outer, &acted);
                let sum = Permutation::direct_sum(&taus.iter().map(|t| (*t).clone()).collect::<Vec<_>>());
                let rhs = view.act(&plain, &sum);
                report.check(
                    "equivariance-args",
                    || format!("{outer} ; {} ; {}", fmt_tuple(ys), fmt_tuple(&taus)),
                    &rhs,
                    &lhs,
                );
                ensure_limit(&report, limit)?;
            }
        }
    }
    Ok(report)
}

/// Checks that `f` is a map of operads: identity to identity, degrees
/// preserved, and composition preserved on every composition within bound.
pub fn check_operad_map<S, D>(
    name: &str,
    f: impl Fn(&S::Elem) -> D::Elem,
    src: &S,
    dst: &D,
    bound: usize,
    limit: usize,
) -> Result<Report, Overflow>
where
    S: Operad,
    D: Operad,
{
    let mut report = Report::new(format!("map[{name}: {} -> {}]", src.name(), dst.name()))
        .with_param("bound", bound)
        .with_param("limit", limit);
    map_laws(&mut report, &f, src, dst, bound, limit)?;
    Ok(report)
}

/// Like [`check_operad_map`], additionally requiring the map to commute
/// with the symmetric group actions.
pub fn check_sym_operad_map<S, D>(
    name: &str,
    f: impl Fn(&S::Elem) -> D::Elem,
    src: &S,
    dst: &D,
    bound: usize,
    limit: usize,
) -> Result<Report, Overflow>
where
    S: SymmetricOperad,
    D: SymmetricOperad,
{
    let mut report = Report::new(format!("sym-map[{name}: {} -> {}]", src.name(), dst.name()))
        .with_param("bound", bound)
        .with_param("limit", limit);
    map_laws(&mut report, &f, src, dst, bound, limit)?;
    for x in src.elements_up_to(bound) {
        for s in Permutation::all(src.degree(&x)) {
            let lhs = f(&src.act(&x, &s));
            let rhs = dst.act(&f(&x), &s);
            report.check("map-action", || format!("{x} ; {s}"), &rhs, &lhs);
            ensure_limit(&report, limit)?;
        }
    }
    Ok(report)
}

fn map_laws<S, D>(
    report: &mut Report,
    f: &impl Fn(&S::Elem) -> D::Elem,
    src: &S,
    dst: &D,
    bound: usize,
    limit: usize,
) -> Result<(), Overflow>
where
    S: Operad,
    D: Operad,
{
    report.check("map-identity", || "identity".to_string(), &dst.identity(), &f(&src.identity()));
    let elems = src.elements_up_to(bound);
    let pools = pools_by_measure(src, bound);
    for x in &elems {
        report.check("map-degree", || x.to_string(), &src.degree(x), &dst.degree(&f(x)));
        ensure_limit(report, limit)?;
    }
    for outer in &elems {
        let n = src.degree(outer);
        if dst.degree(&f(outer)) != n {
            continue; // recorded as a map-degree failure above
        }
        let ys_tuples = tuples_within(&pools, n, arg_budget(src, outer, bound), limit + 1)?;
        for ys in &ys_tuples {
            if ys.iter().any(|y| dst.degree(&f(y)) != src.degree(y)) {
                continue;
            }
            let mapped_then = f(&src.gamma(outer, ys));
            let images: Vec<D::Elem> = ys.iter().map(&f).collect();
            let composed_in_dst = dst.gamma(&f(outer), &images);
            report.check(
                "map-gamma",
                || format!("{outer} ; {}", fmt_tuple(ys)),
                &composed_in_dst,
                &mapped_then,
            );
            ensure_limit(report, limit)?;
        }
    }
    Ok(())
}

/// Deliberately corrupted operad views. Each one makes a single plausible
/// implementation mistake; the suites must catch all of them.
pub mod mutant {
    use super::*;
    use crate::slots::Slotted;
    use crate::sym::{FreeSymOperad, SymElem};
    use crate::tree::Tree;
    use crate::view::{VOperad, ZOperad};

    /// Forgets the outer operation's parenthesization during composition,
    /// rebuilding the result as if the outer tree were a right comb.
    #[derive(Clone, Copy, Debug, Default)]
    pub struct DroppedParensV;

    fn right_comb(n: usize) -> Tree {
        match n {
            1 => Tree::Leaf,
            _ => Tree::node(Tree::Leaf, right_comb(n - 1)),
        }
    }

    impl Operad for DroppedParensV {
        type Elem = Tree;

        fn name(&self) -> String {
            "V[dropped-parens]".to_string()
        }

        fn identity(&self) -> Tree {
            Tree::Leaf
        }

        fn degree(&self, e: &Tree) -> usize {
            e.degree()
        }

        fn gamma(&self, outer: &Tree, args: &[Tree]) -> Tree {
            right_comb(outer.degree()).gamma(args).expect("arity checked by caller")
        }

        fn elements_up_to(&self, bound: usize) -> Vec<Tree> {
            VOperad.elements_up_to(bound)
        }
    }

    /// Takes the block sizes in σ-permuted order instead of the original
    /// argument order when building the block permutation.
    #[derive(Clone, Copy, Debug, Default)]
    pub struct WrongBlockOrderLV;

    impl Operad for WrongBlockOrderLV {
        type Elem = SymElem<Tree>;

        fn name(&self) -> String {
            "LV[wrong-block-order]".to_string()
        }

        fn identity(&self) -> Self::Elem {
            FreeSymOperad::new(VOperad).identity()
        }

        fn degree(&self, e: &Self::Elem) -> usize {
            e.base.degree()
        }

        fn gamma(&self, outer: &Self::Elem, args: &[Self::Elem]) -> Self::Elem {
            let sizes: Vec<usize> = args.iter().map(|a| self.degree(a)).collect();
            let reordered: Vec<Tree> = outer
                .perm
                .apply_to_slice(args)
                .expect("arity checked by caller")
                .into_iter()
                .map(|a| a.base)
                .collect();
            let base = outer.base.gamma(&reordered).expect("arity checked");
            let wrong_sizes = outer.perm.apply_to_slice(&sizes).expect("degree matches");
            let arg_perms: Vec<Permutation> = args.iter().map(|a| a.perm.clone()).collect();
            let perm = outer
                .perm
                .block(&wrong_sizes)
                .expect("same length")
                .compose(&Permutation::direct_sum(&arg_perms))
                .expect("total degree preserved");
            SymElem::new(base, perm)
        }

        fn elements_up_to(&self, bound: usize) -> Vec<Self::Elem> {
            FreeSymOperad::new(VOperad).elements_up_to(bound)
        }
    }

    impl SymmetricOperad for WrongBlockOrderLV {
        fn act(&self, e: &Self::Elem, p: &Permutation) -> Self::Elem {
            FreeSymOperad::new(VOperad).act(e, p)
        }
    }

    /// Drops the slot-index shift when pairing slotted parenthesizations:
    /// the right factor's slots are unioned in unshifted, as if both factors
    /// started at leaf 1.
    #[derive(Clone, Copy, Debug, Default)]
    pub struct UnshiftedZ;

    fn unshifted_dot(a: &Slotted, b: &Slotted) -> Slotted {
        let tree = Tree::node(a.tree().clone(), b.tree().clone());
        let slots: Vec<usize> =
            a.slots().iter().chain(b.slots()).copied().sorted().dedup().collect();
        Slotted::new(tree, slots).expect("unshifted slots still lie in range")
    }

    fn unshifted_gamma(outer: &Slotted, args: &[Slotted]) -> Slotted {
        match outer.decompose() {
            None => {
                if outer.degree() == 0 {
                    outer.clone()
                } else {
                    args[0].clone()
                }
            }
            Some((z1, z2)) => {
                let k = z1.degree();
                unshifted_dot(&unshifted_gamma(&z1, &args[..k]), &unshifted_gamma(&z2, &args[k..]))
            }
        }
    }

    impl Operad for UnshiftedZ {
        type Elem = Slotted;

        fn name(&self) -> String {
            "Z[unshifted-dot]".to_string()
        }

        fn identity(&self) -> Slotted {
            Slotted::identity()
        }

        fn degree(&self, e: &Slotted) -> usize {
            e.degree()
        }

        fn gamma(&self, outer: &Slotted, args: &[Slotted]) -> Slotted {
            assert_eq!(args.len(), outer.degree(), "arity checked by caller");
            unshifted_gamma(outer, args)
        }

        fn measure(&self, e: &Slotted) -> usize {
            e.internal_degree()
        }

        fn elements_up_to(&self, bound: usize) -> Vec<Slotted> {
            ZOperad.elements_up_to(bound)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::endo::EndOperad;
    use crate::sym::FreeSymOperad;
    use crate::view::{TOperad, V0Operad, VOperad, ZOperad};

    #[test]
    fn nonsym_laws_hold_on_small_views() {
        for (report, expect_laws) in [
            (check_nonsym_axioms(&VOperad, 4, 100_000).unwrap(), 4),
            (check_nonsym_axioms(&V0Operad, 3, 100_000).unwrap(), 4),
            (check_nonsym_axioms(&ZOperad, 3, 100_000).unwrap(), 4),
            (check_nonsym_axioms(&TOperad, 4, 100_000).unwrap(), 4),
        ] {
            assert!(report.all_pass(), "{}", report.summary());
            assert_eq!(report.stats.len(), expect_laws);
            assert!(report.total() > 0);
        }
    }

    #[test]
    fn sym_laws_hold_on_small_views() {
        let lv = FreeSymOperad::new(VOperad);
        let report = check_sym_axioms(&lv, 3, 100_000).unwrap();
        assert!(report.all_pass(), "{}", report.summary());
        let end = EndOperad::new(2);
        let report = check_sym_axioms(&end, 2, 100_000).unwrap();
        assert!(report.all_pass(), "{}", report.summary());
    }

    #[test]
    fn refuses_oversized_suites() {
        let err = check_nonsym_axioms(&VOperad, 5, 10).unwrap_err();
        assert!(err.counted > err.limit);
    }

    #[test]
    fn detects_dropped_parenthesization() {
        let report = check_nonsym_axioms(&mutant::DroppedParensV, 4, 100_000).unwrap();
        assert!(!report.all_pass());
        let laws: Vec<&str> =
            report.failures().map(|i| i.law.as_str()).collect::<std::collections::HashSet<_>>().into_iter().collect();
        assert!(laws.contains(&"associativity"), "failed laws: {laws:?}");
    }

    #[test]
    fn detects_wrong_block_order() {
        let report = check_sym_axioms(&mutant::WrongBlockOrderLV, 3, 100_000).unwrap();
        assert!(!report.all_pass());
        assert!(report.failures().any(|i| i.law == "equivariance-outer"));
    }

    #[test]
    fn detects_missing_slot_shift() {
        let report = check_nonsym_axioms(&mutant::UnshiftedZ, 3, 100_000).unwrap();
        assert!(!report.all_pass());
    }

    #[test]
    fn map_check_accepts_identity_map() {
        let report =
            check_operad_map("self", |t: &crate::tree::Tree| t.clone(), &VOperad, &VOperad, 4, 100_000)
                .unwrap();
        assert!(report.all_pass(), "{}", report.summary());
    }

    #[test]
    fn map_check_rejects_degree_breaking_map() {
        // Collapse everything to the identity: degrees break immediately.
        let report = check_operad_map(
            "collapse",
            |_t: &crate::tree::Tree| crate::tree::Tree::Leaf,
            &VOperad,
            &VOperad,
            3,
            100_000,
        )
        .unwrap();
        assert!(report.failures().any(|i| i.law == "map-degree"));
    }
}
