//! Semiring law verification: commutativity, associativity, units and
//! distributivity of the two ideal operations on the one-step closure of
//! the standard generators, the sign-square identity, and the arithmetic of
//! the two-parameter family.

use std::collections::BTreeMap;

use crate::report::Assertion;
use sinfty_core::ideals::{
    dagger_with, ideal_j_minus, ideal_j_plus, ideal_schur_weyl, join_with, unit_ideal,
    SemiringCtx, TruncatedIdeal,
};
use sinfty_core::scalar::FieldKind;

const Q: FieldKind = FieldKind::Rational;

/// A pool of interned ideals with memoised operations: levelwise-equal
/// ideals share one index, so law checks become index comparisons and each
/// distinct operand pair is computed once.
struct Pool {
    ctx: SemiringCtx,
    ideals: Vec<TruncatedIdeal>,
    names: Vec<String>,
    memo: BTreeMap<(u8, usize, usize), usize>,
}

const JOIN: u8 = 0;
const DAGGER: u8 = 1;

impl Pool {
    fn new() -> Self {
        Pool {
            ctx: SemiringCtx::new(),
            ideals: Vec::new(),
            names: Vec::new(),
            memo: BTreeMap::new(),
        }
    }

    fn intern(&mut self, ideal: TruncatedIdeal, name: String) -> usize {
        if let Some(i) = self.ideals.iter().position(|x| x.same_levels(&ideal)) {
            return i;
        }
        self.ideals.push(ideal);
        self.names.push(name);
        self.ideals.len() - 1
    }

    fn op(&mut self, which: u8, a: usize, b: usize) -> usize {
        if let Some(&r) = self.memo.get(&(which, a, b)) {
            return r;
        }
        let (x, y) = (&self.ideals[a], &self.ideals[b]);
        let result = match which {
            JOIN => join_with(&mut self.ctx, x, y).unwrap(),
            _ => dagger_with(&mut self.ctx, x, y).unwrap(),
        };
        let word = if which == JOIN { "join" } else { "dagger" };
        let name = format!("({} {} {})", self.names[a], word, self.names[b]);
        let idx = self.intern(result, name);
        self.memo.insert((which, a, b), idx);
        idx
    }
}

/// Criterion: the closure of {unit, J+, J-, P11} under one application of
/// the two operations satisfies the semiring laws levelwise at N = 4, with
/// associativity and distributivity quantified over the whole closure.
pub fn run_laws(n_levels: usize) -> Vec<Assertion> {
    let mut pool = Pool::new();
    let unit = pool.intern(unit_ideal(n_levels, Q), "unit".into());
    let jp = pool.intern(ideal_j_plus(n_levels, Q), "J+".into());
    let jm = pool.intern(ideal_j_minus(n_levels, Q), "J-".into());
    let p11 = pool.intern(ideal_schur_weyl(1, 1, n_levels, Q), "P(1,1)".into());
    let generators = vec![unit, jp, jm, p11];

    // one-step closure (interning deduplicates it)
    let mut closure = generators.clone();
    for &a in &generators {
        for &b in &generators {
            for which in [JOIN, DAGGER] {
                let r = pool.op(which, a, b);
                if !closure.contains(&r) {
                    closure.push(r);
                }
            }
        }
    }

    let mut out = Vec::new();

    // commutativity over all closure pairs
    let mut comm_fail: Option<String> = None;
    let mut comm_pairs = 0usize;
    for (i, &a) in closure.iter().enumerate() {
        for &b in closure.iter().skip(i) {
            comm_pairs += 1;
            for which in [JOIN, DAGGER] {
                if pool.op(which, a, b) != pool.op(which, b, a) {
                    comm_fail
                        .get_or_insert(format!("{} op {}", pool.names[a], pool.names[b]));
                }
            }
        }
    }
    out.push(Assertion::check(
        "semiring.commutative",
        "join and dagger commute",
        format!("{comm_pairs} closure pairs, N={n_levels}, field Q"),
        comm_fail.clone().unwrap_or_else(|| "all equal".into()),
        "all equal",
        comm_fail.is_none(),
    ));

    // associativity over all closure triples
    let mut assoc_fail: Option<String> = None;
    let mut assoc_triples = 0usize;
    for &a in &closure {
        for &b in &closure {
            for &c in &closure {
                assoc_triples += 1;
                for which in [JOIN, DAGGER] {
                    let ab = pool.op(which, a, b);
                    let bc = pool.op(which, b, c);
                    if pool.op(which, ab, c) != pool.op(which, a, bc) {
                        assoc_fail.get_or_insert(format!(
                            "{} {} {}",
                            pool.names[a], pool.names[b], pool.names[c]
                        ));
                    }
                }
            }
        }
    }
    out.push(Assertion::check(
        "semiring.associative",
        "join and dagger associate",
        format!("{assoc_triples} closure triples, N={n_levels}, field Q"),
        assoc_fail.clone().unwrap_or_else(|| "all equal".into()),
        "all equal",
        assoc_fail.is_none(),
    ));

    // units: J+ for join, the identity ideal for dagger and join absorber
    let mut unit_fail: Option<String> = None;
    for &x in &closure {
        if pool.op(JOIN, x, jp) != x {
            unit_fail.get_or_insert(format!("{} join J+", pool.names[x]));
        }
        if pool.op(DAGGER, x, unit) != x {
            unit_fail.get_or_insert(format!("{} dagger unit", pool.names[x]));
        }
        if pool.op(JOIN, x, unit) != unit {
            unit_fail.get_or_insert(format!("{} join unit", pool.names[x]));
        }
    }
    out.push(Assertion::check(
        "semiring.units",
        "J+ is the join unit, the identity ideal the dagger unit and join zero",
        format!("{} closure elements, N={n_levels}, field Q", closure.len()),
        unit_fail.clone().unwrap_or_else(|| "all equal".into()),
        "all equal",
        unit_fail.is_none(),
    ));

    // distributivity (I dagger J) join P = (I join P) dagger (J join P)
    // over all closure triples
    let mut dist_fail: Option<String> = None;
    let mut dist_triples = 0usize;
    for &i in &closure {
        for &j in &closure {
            for &p in &closure {
                dist_triples += 1;
                let i_dag_j = pool.op(DAGGER, i, j);
                let lhs = pool.op(JOIN, i_dag_j, p);
                let ip = pool.op(JOIN, i, p);
                let jp_join = pool.op(JOIN, j, p);
                let rhs = pool.op(DAGGER, ip, jp_join);
                if lhs != rhs {
                    dist_fail.get_or_insert(format!(
                        "({},{}) over {}",
                        pool.names[i], pool.names[j], pool.names[p]
                    ));
                }
            }
        }
    }
    out.push(Assertion::check(
        "semiring.distributive",
        "(I dagger J) join P = (I join P) dagger (J join P)",
        format!("{dist_triples} closure triples, N={n_levels}, field Q"),
        dist_fail.clone().unwrap_or_else(|| "all equal".into()),
        "all equal",
        dist_fail.is_none(),
    ));

    out
}

/// Criterion: the square of the sign ideal under join is the augmentation
/// ideal, levelwise to five levels, over the rationals and mod 3.
pub fn run_sign_square() -> Vec<Assertion> {
    let mut out = Vec::new();
    for field in [Q, FieldKind::Prime(3)] {
        let jm = ideal_j_minus(5, field);
        let jj = sinfty_core::ideals::join(&jm, &jm).unwrap();
        let jp = ideal_j_plus(5, field);
        let pass = jj.same_levels(&jp);
        out.push(Assertion::check(
            format!("semiring.sign-square.{field}"),
            "join(J-, J-) = J+",
            format!("N=5, field {field}"),
            if pass {
                "equal at all levels".into()
            } else {
                format!(
                    "level dims {:?} vs {:?}",
                    (1..=5).map(|n| jj.level(n).dim()).collect::<Vec<_>>(),
                    (1..=5).map(|n| jp.level(n).dim()).collect::<Vec<_>>()
                )
            },
            "equal at all levels",
            pass,
        ));
    }
    out
}

/// Criterion: the two-parameter kernels multiply like the group semiring on
/// two points: dagger adds the parameters, join multiplies them by
/// (a,b)(c,d) = (ac+bd, ad+bc).
pub fn run_two_parameter_family(n_levels: usize) -> Vec<Assertion> {
    let ctx = &mut SemiringCtx::new();
    let params: Vec<(u32, u32)> = vec![(0, 0), (1, 0), (0, 1), (2, 0), (1, 1), (0, 2)];
    let build = |m: u32, n: u32| ideal_schur_weyl(m, n, n_levels, Q);
    let mut dagger_fail: Option<String> = None;
    let mut join_fail: Option<String> = None;
    let mut pairs = 0usize;
    for (i, &(a, b)) in params.iter().enumerate() {
        for &(c, d) in params.iter().skip(i) {
            pairs += 1;
            let x = build(a, b);
            let y = build(c, d);
            let dag = dagger_with(ctx, &x, &y).unwrap();
            if !dag.same_levels(&build(a + c, b + d)) {
                dagger_fail.get_or_insert(format!("({a},{b}) dagger ({c},{d})"));
            }
            let jn = join_with(ctx, &x, &y).unwrap();
            if !jn.same_levels(&build(a * c + b * d, a * d + b * c)) {
                join_fail.get_or_insert(format!("({a},{b}) join ({c},{d})"));
            }
        }
    }
    vec![
        Assertion::check(
            "semiring.family.dagger-adds",
            "dagger(P(a,b), P(c,d)) = P(a+c, b+d)",
            format!("{pairs} parameter pairs with a+b, c+d <= 2, N={n_levels}, field Q"),
            dagger_fail.clone().unwrap_or_else(|| "all equal".into()),
            "all equal",
            dagger_fail.is_none(),
        ),
        Assertion::check(
            "semiring.family.join-multiplies",
            "join(P(a,b), P(c,d)) = P(ac+bd, ad+bc)",
            format!("{pairs} parameter pairs with a+b, c+d <= 2, N={n_levels}, field Q"),
            join_fail.clone().unwrap_or_else(|| "all equal".into()),
            "all equal",
            join_fail.is_none(),
        ),
    ]
}

pub fn run(n_levels: usize) -> Vec<Assertion> {
    let mut out = run_laws(n_levels);
    out.extend(run_sign_square());
    out.extend(run_two_parameter_family(n_levels));
    out
}
