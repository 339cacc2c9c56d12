//! Report rendering: aligned text by default, structured JSON with `--json`.
//! Counterexamples are never truncated.

use serde_json::json;

use ybrace_core::brace::{SemibraceFormReport, StructuralReport, WeakBrace};
use ybrace_core::construct::{matched_product, semidirect_3x3_system};
use ybrace_core::error::Result as CoreResult;
use ybrace_core::factor::sym3_showcase;
use ybrace_core::table::{cyclic, join_semilattice, CayleyTable};
use ybrace_core::ybe::{
    classify, regularity_report, solution_of, ComponentwiseReport, RegularityReport,
    SolutionProfile,
};

fn verdict(ok: bool) -> &'static str {
    if ok {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn line(as_json: bool, name: &str, holds: bool, witness: Option<String>) {
    if as_json {
        println!(
            "{}",
            json!({"check": name, "holds": holds, "witness": witness})
        );
    } else {
        match witness {
            Some(w) => println!("{:<44} {}  {}", name, verdict(holds), w),
            None => println!("{:<44} {}", name, verdict(holds)),
        }
    }
}

pub fn profile(as_json: bool, p: &SolutionProfile) {
    if as_json {
        println!(
            "{}",
            json!({
                "satisfiesYbe": p.satisfies_ybe,
                "involutive": p.involutive,
                "idempotent": p.idempotent,
                "cubic": p.cubic,
                "cubeEqualsSquare": p.cube_equals_square,
                "bijective": p.bijective,
            })
        );
    } else {
        println!("satisfies YBE      {}", p.satisfies_ybe);
        println!("involutive         {}", p.involutive);
        println!("idempotent         {}", p.idempotent);
        println!("cubic              {}", p.cubic);
        println!("cube equals square {}", p.cube_equals_square);
        println!("bijective          {}", p.bijective);
    }
}

pub fn equivalence(as_json: bool, witness: Option<&[usize]>) {
    if as_json {
        println!("{}", json!({"equivalent": witness.is_some(), "witness": witness}));
    } else if let Some(f) = witness {
        println!("equivalent via {f:?}");
    }
}

pub fn verify(
    as_json: bool,
    wb: &WeakBrace,
    semibrace: &SemibraceFormReport,
    structural: &StructuralReport,
    componentwise: &ComponentwiseReport,
    regularity: &RegularityReport,
) {
    if as_json {
        let checks: Vec<_> = structural
            .checks
            .iter()
            .map(|c| json!({"check": c.name, "holds": c.holds}))
            .collect();
        println!(
            "{}",
            json!({
                "order": wb.order(),
                "valid": true,
                "semibraceForm": semibrace.all_hold(),
                "componentwise": componentwise.all_hold(),
                "completeRegularity": regularity.all_hold(),
                "class": {
                    "isSkewBrace": structural.class.is_skew_brace,
                    "isBrace": structural.class.is_brace,
                    "isBiSkew": structural.class.is_bi_skew,
                    "isTrivial": structural.class.is_trivial,
                    "isAlmostTrivial": structural.class.is_almost_trivial,
                    "addCommutative": structural.class.add_commutative,
                    "addBand": structural.class.add_band,
                    "mulClifford": structural.class.mul_clifford,
                },
                "checks": checks,
            })
        );
        return;
    }
    line(false, "weak-brace axioms", true, None);
    line(false, "equivalent semi-brace form", semibrace.all_hold(), None);
    for c in &structural.checks {
        line(false, c.name, c.holds, None);
    }
    line(
        false,
        "componentwise braid conditions",
        componentwise.all_hold(),
        None,
    );
    line(
        false,
        "complete regularity of the solution",
        regularity.all_hold(),
        None,
    );
    let cls = &structural.class;
    println!(
        "class: skew-brace={} brace={} bi-skew={} trivial={} almost-trivial={} add-commutative={} add-band={} mul-clifford={}",
        cls.is_skew_brace,
        cls.is_brace,
        cls.is_bi_skew,
        cls.is_trivial,
        cls.is_almost_trivial,
        cls.add_commutative,
        cls.add_band,
        cls.mul_clifford
    );
}

pub fn factorizations(
    as_json: bool,
    ambient: &CayleyTable,
    fs: &[ybrace_core::factor::ExactFactorization],
) {
    let show = |elems: &[usize]| {
        elems
            .iter()
            .map(|&e| ambient.label(e))
            .collect::<Vec<_>>()
            .join(" ")
    };
    if as_json {
        let items: Vec<_> = fs
            .iter()
            .enumerate()
            .map(|(i, f)| json!({"index": i, "u": f.u(), "v": f.v()}))
            .collect();
        println!("{}", json!({"count": fs.len(), "factorizations": items}));
    } else {
        println!("{} exact factorization(s)", fs.len());
        for (i, f) in fs.iter().enumerate() {
            println!("[{i}] U = {{{}}}  V = {{{}}}", show(f.u()), show(f.v()));
        }
    }
}

fn map_with_labels(wb: &WeakBrace, map: &[usize]) -> String {
    map.iter()
        .map(|&x| wb.label(x))
        .collect::<Vec<_>>()
        .join(" ")
}

pub fn demo_trivial(as_json: bool) {
    let c2 = cyclic(2).expect("order 2");
    let group_brace = ybrace_core::brace::make_weak_brace(&c2, &c2).expect("trivial brace");
    let chain = join_semilattice(2, &[(0, 1)]).expect("two-chain");
    let chain_brace =
        ybrace_core::brace::make_weak_brace(&chain, &chain).expect("trivial weak brace");
    for (name, wb) in [("cyclic group of order 2", &group_brace), ("two-chain join semilattice", &chain_brace)] {
        let r = solution_of(wb);
        let p = classify(&r);
        let reg = regularity_report(wb).expect("valid brace");
        if as_json {
            println!(
                "{}",
                json!({
                    "carrier": name,
                    "solution": r.entries(),
                    "involutive": p.involutive,
                    "idempotent": p.idempotent,
                    "cubic": p.cubic,
                    "completelyRegular": reg.all_hold(),
                })
            );
        } else {
            println!("trivial weak brace on the {name}:");
            println!("  r = {:?}", r.entries());
            println!(
                "  involutive={} idempotent={} cubic={} completely-regular={}",
                p.involutive,
                p.idempotent,
                p.cubic,
                reg.all_hold()
            );
        }
    }
}

pub fn demo_semidirect(as_json: bool) -> CoreResult<()> {
    let sys = semidirect_3x3_system()?;
    let wb = matched_product(&sys);
    let labels = wb.labels().expect("product carries labels").to_vec();
    let at = |name: &str| labels.iter().position(|l| l == name).expect("label");
    let yy = at("(y,y)");
    let y1 = at("(y,1)");
    let left = wb.mul(yy, wb.minv(yy));
    let right = wb.mul(wb.minv(yy), yy);
    let reg = regularity_report(&wb)?;
    if as_json {
        println!(
            "{}",
            json!({
                "order": wb.order(),
                "lambdaAtAAInv": {"index": left, "label": wb.label(left), "value": wb.label(wb.lambda(left, y1))},
                "lambdaAtAInvA": {"index": right, "label": wb.label(right), "value": wb.label(wb.lambda(right, y1))},
                "lambdaMapsDiffer": wb.lambda_map(left) != wb.lambda_map(right),
                "completelyRegular": reg.all_hold(),
            })
        );
    } else {
        println!("semidirect product of the three-element join semilattice by the");
        println!("three-element commutative inverse monoid through the swap action:");
        println!(
            "  lambda_{{(y,y) o (y,y)^-}}(y,1) = lambda_{{{}}}(y,1) = {}",
            wb.label(left),
            wb.label(wb.lambda(left, y1))
        );
        println!(
            "  lambda_{{(y,y)^- o (y,y)}}(y,1) = lambda_{{{}}}(y,1) = {}",
            wb.label(right),
            wb.label(wb.lambda(right, y1))
        );
        println!(
            "  the two lambda maps differ: {}",
            wb.lambda_map(left) != wb.lambda_map(right)
        );
        println!("  complete regularity: {}", reg.all_hold());
    }
    Ok(())
}

pub fn demo_sym3(as_json: bool) -> CoreResult<()> {
    let show = sym3_showcase()?;
    let total: usize = (1..=6).product();
    if as_json {
        let maps = |wb: &WeakBrace, rho: bool| -> Vec<serde_json::Value> {
            (0..6)
                .map(|a| {
                    let m = if rho { wb.rho_map(a) } else { wb.lambda_map(a) };
                    json!({"at": wb.label(a), "map": m})
                })
                .collect()
        };
        println!(
            "{}",
            json!({
                "lambdaCirc": maps(&show.circ, false),
                "rhoCirc": maps(&show.circ, true),
                "lambdaBullet": maps(&show.bullet, false),
                "rhoBullet": maps(&show.bullet, true),
                "bijectionsSearched": total,
                "equivalent": show.equivalence.is_some(),
                "isomorphic": show.isomorphism.is_some(),
            })
        );
        return Ok(());
    }
    println!("braces on the symmetric group of degree 3 from the factorization");
    println!("U = {{id (12)}}, V = {{id (123) (132)}}:");
    for (tag, wb, rho) in [
        ("lambda(circ)", &show.circ, false),
        ("rho(circ)", &show.circ, true),
        ("lambda(bullet)", &show.bullet, false),
        ("rho(bullet)", &show.bullet, true),
    ] {
        for a in 0..6 {
            let m = if rho { wb.rho_map(a) } else { wb.lambda_map(a) };
            println!("  {tag:<15} at {:<6} -> [{}]", wb.label(a), map_with_labels(wb, m));
        }
    }
    match &show.equivalence {
        Some(f) => println!("solutions equivalent via {f:?}"),
        None => println!("no equivalence among {total} bijections"),
    }
    match &show.isomorphism {
        Some(f) => println!("braces isomorphic via {f:?}"),
        None => println!("the braces are not isomorphic"),
    }
    Ok(())
}
