use alloc::vec;
use alloc::vec::Vec;

use super::*;
use crate::local::{macaulay_colength_oracle, Colength};
use crate::milnor::{milnor_number, DegreeCap};
use crate::polynomial::{parse_polynomial, parse_rational};

const CUSP: [&str; 3] = ["x", "y", "a"];
const THREEFOLD: [&str; 5] = ["t", "x", "y", "z", "a"];

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn qs(list: &[i64]) -> Vec<Rational> {
    list.iter()
        .map(|&v| Rational::from_integer(v.into()))
        .collect()
}

fn section(coords: &[&str]) -> Vec<Polynomial> {
    coords
        .iter()
        .map(|c| parse_polynomial(c, &["a"]).unwrap())
        .collect()
}

fn family(
    text: &str,
    vars: &[&str],
    sections: &[&[&str]],
    samples: &[i64],
    excluded: &[i64],
) -> FamilySpec {
    let f = parse_polynomial(text, vars).unwrap();
    FamilySpec::new(
        f,
        sections.iter().map(|s| section(s)).collect(),
        qs(samples),
        qs(excluded),
    )
    .unwrap()
}

fn cross_term(samples: &[i64]) -> FamilySpec {
    family(
        "t^2+x^2+y^6+a*y^3*z^3+z^6",
        &THREEFOLD,
        &[&["0", "0", "0", "0"]],
        samples,
        &[],
    )
}

fn cusp(samples: &[i64]) -> FamilySpec {
    family("x^3+y^2+a*x^2", &CUSP, &[&["0", "0"]], samples, &[])
}

fn seqs(r: &FiberReport) -> Vec<Vec<u64>> {
    r.per_section
        .iter()
        .map(|s| match &s.invariant {
            SectionInvariant::Sequence(q) => q.values().to_vec(),
            SectionInvariant::NonIsolated => Vec::new(),
        })
        .collect()
}

#[test]
fn specialize_examples() {
    let fam = cross_term(&[0]);
    let v4 = ["t", "x", "y", "z"];
    assert_eq!(
        specialize(&fam, &q("0"), 0).unwrap(),
        parse_polynomial("t^2+x^2+y^6+z^6", &v4).unwrap()
    );
    assert_eq!(
        specialize(&fam, &q("1"), 0).unwrap(),
        parse_polynomial("t^2+x^2+y^6+y^3*z^3+z^6", &v4).unwrap()
    );
    let c = cusp(&[0]);
    assert_eq!(
        specialize(&c, &q("0"), 0).unwrap(),
        parse_polynomial("x^3+y^2", &["x", "y"]).unwrap()
    );
    assert_eq!(
        specialize(&c, &q("0"), 3),
        Err(FamilyError::SectionIndex(3))
    );
}

#[test]
fn specialize_translates_to_the_section() {
    let fam = family("(x-a)^2 + y^3", &CUSP, &[&["a", "0"]], &[2], &[]);
    assert_eq!(
        specialize(&fam, &q("2"), 0).unwrap(),
        parse_polynomial("x^2+y^3", &["x", "y"]).unwrap()
    );
}

#[test]
fn affine_chart_of_the_projective_family() {
    // the w = 1 chart carries extra t^6, x^6 terms; μ is still 25 and the
    // germ is no longer weighted homogeneous
    let fam = family(
        "t^2 - 1/3*t^6 + x^2 + 1/3*x^6 + y^6 + a*y^3*z^3 + z^6",
        &THREEFOLD,
        &[&["0", "0", "0", "0"]],
        &[1],
        &[],
    );
    let g = specialize(&fam, &q("1"), 0).unwrap();
    assert_eq!(crate::milnor::detect_quasihomogeneous(&g), None);
    assert_eq!(milnor_number(&g, DegreeCap::Auto), Ok(Colength::Finite(25)));
    assert_eq!(
        macaulay_colength_oracle(&g.gradient(), 40),
        Ok(Colength::Finite(25))
    );
    let degenerate = specialize(&fam, &q("2"), 0).unwrap();
    assert_eq!(
        milnor_number(&degenerate, DegreeCap::Auto),
        Ok(Colength::NonIsolated)
    );
}

#[test]
fn fiber_report_examples() {
    let cfg = SectionSamplingConfig::default();
    let fam = cross_term(&[3, 2]);
    let r = fiber_report(&fam, &q("3"), &cfg).unwrap();
    assert_eq!(seqs(&r), [vec![25, 5, 1, 1, 1]]);
    assert_eq!(r.milnor_sum, Some(25));
    let d = fiber_report(&fam, &q("2"), &cfg).unwrap();
    assert_eq!(d.per_section[0].invariant, SectionInvariant::NonIsolated);
    assert_eq!(d.milnor_sum, None);

    let c = cusp(&[1]);
    let r = fiber_report(&c, &q("1"), &cfg).unwrap();
    assert_eq!(seqs(&r), [vec![1, 1, 1]]);
    // the Jacobian (3x^2 + 2x, 2y) has colength 1
    let g = specialize(&c, &q("1"), 0).unwrap();
    assert_eq!(
        macaulay_colength_oracle(&g.gradient(), 10),
        Ok(Colength::Finite(1))
    );
}

#[test]
fn whitney_examples() {
    let cfg = SectionSamplingConfig::default();
    let v = whitney_check(&cross_term(&[-1, 0, 1, 3]), &cfg).unwrap();
    assert_eq!(v.verdict, Verdict::EquisingularEvidence);
    let common = v.common_multiset.unwrap();
    assert_eq!(common.len(), 1);
    assert_eq!(common[0].values(), &[25, 5, 1, 1, 1]);
    assert_eq!(v.strata.len(), 1);
    assert!(v
        .notes
        .contains(&VerdictNote::SampledCertificate { samples: 4 }));

    let v = whitney_check(&cusp(&[0, 1]), &cfg).unwrap();
    assert_eq!(v.verdict, Verdict::NotEquisingular);
    let mus: Vec<Option<u64>> = v
        .witnesses
        .iter()
        .map(|w| match w {
            FiberOutcome::Report(r) => r.milnor_sum,
            FiberOutcome::Failed { .. } => None,
        })
        .collect();
    assert_eq!(mus, [Some(2), Some(1)]);
    assert_eq!(v.witnesses[0].parameter(), &q("0"));

    let v = whitney_check(&cross_term(&[0, 2]), &cfg).unwrap();
    assert_eq!(v.verdict, Verdict::Degenerate);
    assert_eq!(v.witnesses.len(), 1);
    assert_eq!(v.witnesses[0].parameter(), &q("2"));
}

#[test]
fn stratify_examples() {
    let cfg = SectionSamplingConfig::default();
    assert_eq!(
        stratify(&cross_term(&[-1, 0, 1, 3]), &cfg).unwrap().len(),
        1
    );
    let blocks = stratify(&cusp(&[-1, 0, 1]), &cfg).unwrap();
    assert_eq!(blocks.len(), 2);
    assert_eq!(blocks[0].parameters, qs(&[-1, 1]));
    assert_eq!(blocks[1].parameters, qs(&[0]));
    assert_eq!(stratify(&cusp(&[5]), &cfg).unwrap().len(), 1);
}

#[test]
fn sample_order_does_not_matter() {
    let cfg = SectionSamplingConfig::default();
    let a = whitney_check(&cusp(&[3, 0, -1, 1]), &cfg).unwrap();
    let b = whitney_check(&cusp(&[1, -1, 0, 3]), &cfg).unwrap();
    assert_eq!(a.verdict, b.verdict);
    assert_eq!(a.witnesses, b.witnesses);
    let set = |v: &FamilyVerdict| {
        let mut s: Vec<_> = v
            .strata
            .iter()
            .map(|s| (s.key.clone(), s.parameters.clone()))
            .collect();
        s.sort();
        s
    };
    assert_eq!(set(&a), set(&b));
}

#[test]
fn two_nodes_merge_into_a_tacnode() {
    let cfg = SectionSamplingConfig::default();
    let fam = family(
        "y^2 - (x^2 - a^2)^2",
        &CUSP,
        &[&["a", "0"], &["-a", "0"]],
        &[-1, 0, 1],
        &[],
    );
    let r = fiber_report(&fam, &q("0"), &cfg).unwrap();
    assert_eq!(r.per_section.len(), 1, "coinciding sections count once");
    assert_eq!(seqs(&r), [vec![3, 1, 1]]);
    let v = whitney_check(&fam, &cfg).unwrap();
    assert_eq!(v.verdict, Verdict::NotEquisingular);
    assert_eq!(v.strata.len(), 2);
    assert!(v.audit.passed);
    assert_eq!(v.audit.minimum, Some(2));
    assert_eq!(v.audit.special, [(q("0"), 3)]);
}

#[test]
fn semicontinuity_on_the_cusp() {
    let v = whitney_check(&cusp(&[-3, -1, 0, 1, 3]), &SectionSamplingConfig::default()).unwrap();
    assert!(v.audit.passed);
    assert_eq!(v.audit.minimum, Some(1));
    assert_eq!(v.audit.special, [(q("0"), 2)]);
}

#[test]
fn moving_section() {
    let cfg = SectionSamplingConfig::default();
    let fam = family(
        "(x - a^2)^2 + (y + a)^3",
        &CUSP,
        &[&["a^2", "-a"]],
        &[-1, 0, 2],
        &[],
    );
    let v = whitney_check(&fam, &cfg).unwrap();
    assert_eq!(v.verdict, Verdict::EquisingularEvidence);
    assert_eq!(v.common_multiset.unwrap()[0].values(), &[2, 1, 1]);
}

#[test]
fn rejects_misdeclared_sections() {
    let cfg = SectionSamplingConfig::default();
    let off = family("(x - a)^2 + y^3", &CUSP, &[&["0", "0"]], &[0, 1], &[]);
    assert_eq!(
        whitney_check(&off, &cfg),
        Err(FamilyError::SectionNotOnFamily { section: 0 })
    );
    let smooth = family("x^2 + y^2 + a*x", &CUSP, &[&["0", "0"]], &[0, 1], &[]);
    assert_eq!(
        whitney_check(&smooth, &cfg),
        Err(FamilyError::SectionNotSingular {
            section: 0,
            parameter: q("1")
        })
    );
}

#[test]
fn samples_and_exclusions() {
    let f = parse_polynomial("x^3+y^2+a*x^2", &CUSP).unwrap();
    let origin = vec![section(&["0", "0"])];
    let fam = FamilySpec::new(f.clone(), origin.clone(), Vec::new(), qs(&[-3, 3])).unwrap();
    assert_eq!(fam.samples(), qs(&[-1, 0, 1]).as_slice());
    assert_eq!(
        specialize(&fam, &q("3"), 0),
        Err(FamilyError::ExcludedParameter(q("3")))
    );
    assert_eq!(
        FamilySpec::new(f.clone(), origin.clone(), qs(&[1, 2]), qs(&[2])),
        Err(FamilyError::ExcludedParameter(q("2")))
    );
    assert_eq!(
        FamilySpec::new(f.clone(), Vec::new(), Vec::new(), Vec::new()),
        Err(FamilyError::NoSections)
    );
    assert_eq!(
        FamilySpec::new(f, vec![section(&["0"])], Vec::new(), Vec::new()),
        Err(FamilyError::SectionDimension {
            section: 0,
            expected: 2,
            found: 1
        })
    );
}

#[test]
fn fixed_seed_is_reproducible() {
    let cfg = SectionSamplingConfig::with_seed(11);
    let a = whitney_check(&cross_term(&[-1, 1]), &cfg).unwrap();
    let b = whitney_check(&cross_term(&[-1, 1]), &cfg).unwrap();
    assert_eq!(a, b);
}
