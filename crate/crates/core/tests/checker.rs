mod common;

use common::*;
use structctl::io::CertificateFile;
use structctl::{
    certificate_search, compose_parallel, composite_certificate_check, kalman_check, pbh_check,
    verify_certificate, CertificateFailure, CheckOptions, Method, ParamSpace, RowPartition, Status,
    SymMatrix, SystemDef,
};

fn opts() -> CheckOptions {
    CheckOptions::default()
}

fn certificate(name: &str, sys: &SystemDef) -> structctl::Certificate {
    let path = fixture_path(name);
    CertificateFile::load(&path)
        .unwrap()
        .to_certificate(sys, &path.display().to_string())
        .unwrap()
}

/// `T A T⁻¹`, `T B` with `T = diag(factors)`.
fn diagonal_similarity(sys: &SystemDef, factors: &[&str]) -> SystemDef {
    let sp = sys.space().clone();
    let t: Vec<_> = factors.iter().map(|f| rf(f, &sp)).collect();
    let n = sys.n();
    let a_rows = (0..n)
        .map(|i| (0..n).map(|j| &(&t[i] * sys.a().get(i, j)) / &t[j]).collect())
        .collect();
    let b_rows = (0..n)
        .map(|i| (0..sys.m()).map(|j| &t[i] * sys.b().get(i, j)).collect())
        .collect();
    SystemDef::new(
        sys.name(),
        SymMatrix::from_rows(&sp, a_rows).unwrap(),
        SymMatrix::from_rows(&sp, b_rows).unwrap(),
    )
    .unwrap()
}

#[test]
fn exact_tests_agree_on_random_systems() {
    let sp = ParamSpace::new(["z1", "z2", "z3"]).unwrap();
    let mut r = rng(41);
    for i in 0..100 {
        let sys = random_system(&mut r, &sp, i);
        let p = pbh_check(&sys, &opts());
        let k = kalman_check(&sys, &opts());
        assert_eq!(p.status, k.status, "{}: {p} vs {k}", sys.name());
        assert!(matches!(p.status, Status::Controllable | Status::NotControllable));
    }
}

#[test]
fn certificates_on_random_systems_verify() {
    let sp = ParamSpace::new(["z1", "z2", "z3"]).unwrap();
    let mut r = rng(42);
    let mut certified = 0;
    for i in 0..100 {
        let sys = random_system(&mut r, &sp, i);
        let v = certificate_search(&sys, None, &opts()).unwrap();
        assert_eq!(v.method, Method::Matroid);
        if let Some(cert) = v.certificate() {
            assert_eq!(v.status, Status::Certified);
            let check = verify_certificate(&sys, cert).unwrap();
            assert!(check.is_valid(), "{}: {:?}", sys.name(), check.failures);
            certified += 1;
        }
    }
    assert!(certified > 0);
}

/// Disjoint unimodular bases do not by themselves rule out uncontrollable
/// modes: with no inputs, the swap system's blocks are units while the full
/// pencil determinant is `s² − 1`.
#[test]
fn input_free_swap_is_certified_but_not_controllable() {
    let sp = ParamSpace::new(["z1"]).unwrap();
    let a = SymMatrix::from_ints(&sp, &[&[0, 1], &[1, 0]]).unwrap();
    let b = SymMatrix::zeros(&sp, 2, 0);
    let sys = SystemDef::new("swap", a, b).unwrap();
    assert_eq!(certificate_search(&sys, None, &opts()).unwrap().status, Status::Certified);
    assert_eq!(pbh_check(&sys, &opts()).status, Status::NotControllable);
    assert_eq!(kalman_check(&sys, &opts()).status, Status::NotControllable);
}

#[test]
fn verdicts_survive_diagonal_state_scaling() {
    for (name, factors) in [
        ("example1", vec!["2", "z1", "-1", "z2*z3", "1/3"]),
        ("sigma1", vec!["z3", "5"]),
        ("repeated_mode", vec!["z1", "7"]),
    ] {
        let sys = fixture(name);
        let scaled = diagonal_similarity(&sys, &factors);
        assert_eq!(pbh_check(&sys, &opts()).status, pbh_check(&scaled, &opts()).status, "{name}");
        let v1 = certificate_search(&sys, None, &opts()).unwrap();
        let v2 = certificate_search(&scaled, None, &opts()).unwrap();
        assert_eq!(v1.status, v2.status, "{name}");
        // the same bases stay valid; only the claimed witnesses rescale
        if let Some(cert) = v1.certificate() {
            let check = verify_certificate(&scaled, cert).unwrap();
            assert!(check
                .failures
                .iter()
                .all(|f| matches!(f, CertificateFailure::WitnessMismatch { .. })));
        }
    }
}

#[test]
fn composing_the_two_subsystems_gives_example_one() {
    let composed = compose_parallel(&[fixture("sigma1"), fixture("sigma2")]).unwrap();
    let ex1 = fixture("example1");
    assert_eq!(composed.a(), ex1.a());
    assert_eq!(composed.b(), ex1.b());
    assert_eq!(composed.name(), "sigma1+sigma2");

    let v = composite_certificate_check(&[fixture("sigma1"), fixture("sigma2")], &opts()).unwrap();
    assert_eq!(v.method, Method::Composite);
    assert_eq!(v.status, Status::Certified);
    let cert = v.certificate().unwrap();
    assert_eq!(cert.partition.to_string(), "1,2;3,4,5");
    assert!(verify_certificate(&ex1, cert).unwrap().is_valid());
}

#[test]
fn composing_scalar_copies() {
    let s = fixture("scalar");
    let three = compose_parallel(&[s.clone(), s.clone(), s.clone()]).unwrap();
    let sp = s.space().clone();
    assert_eq!(three.a(), &matrix(&sp, &[&["z1", "0", "0"], &["0", "z1", "0"], &["0", "0", "z1"]]));
    assert_eq!(three.b(), &matrix(&sp, &[&["1"], &["1"], &["1"]]));
    // identical modes sharing one input: not controllable
    assert_eq!(pbh_check(&three, &opts()).status, Status::NotControllable);

    let one = compose_parallel(std::slice::from_ref(&s)).unwrap();
    assert_eq!((one.a(), one.b()), (s.a(), s.b()));

    let err = compose_parallel(&[s.clone(), fixture("scalar_two_inputs")]).unwrap_err();
    let text = err.to_string();
    assert!(text.contains("m = 1") && text.contains("m = 2"), "{text}");
}

#[test]
fn example_certificates() {
    let ex1 = fixture("example1");
    let part = RowPartition::from_one_based(&[vec![1, 2], vec![3, 4, 5]], 5).unwrap();
    let v = certificate_search(&ex1, Some(&part), &opts()).unwrap();
    let cert = v.certificate().expect("certificate");
    let labels: Vec<String> = cert.blocks.iter().map(|b| b.labels.join(",")).collect();
    assert_eq!(labels, ["a2,a6", "a3,a4,a7"]);
    let sp = ex1.space().clone();
    assert_eq!(cert.blocks[0].witness.as_ref().unwrap(), &rf("-z3", &sp));
    assert_eq!(cert.blocks[1].witness.as_ref().unwrap(), &rf("1", &sp));

    let ex2 = fixture("example2");
    let check = verify_certificate(&ex2, &certificate("example2_cert", &ex2)).unwrap();
    assert!(check.is_valid(), "{:?}", check.failures);
    let sp2 = ex2.space().clone();
    assert_eq!(
        check.witnesses[2].as_ref().unwrap(),
        &rf("-9*g^2*(z1+2*z2+2*z3)*(4*z1+21*z2+12*z3)/(4*z4*z5*(4*z1+3*z2+12*z3)^2)", &sp2)
    );
}

#[test]
fn invalid_certificates_name_the_failed_clause() {
    let ex1 = fixture("example1");
    let nonunit = verify_certificate(&ex1, &certificate("example1_nonunit_cert", &ex1)).unwrap();
    assert!(!nonunit.is_valid());
    assert!(nonunit.failures.iter().any(|f| f.to_string().contains("-s^2 + s")), "{:?}", nonunit.failures);

    let overlap = verify_certificate(&ex1, &certificate("overlap_cert", &ex1)).unwrap();
    assert!(!overlap.is_valid());
    assert_eq!(
        overlap.failures[0].to_string(),
        "disjointness: a6 is used by blocks 1 and 2"
    );
}

#[test]
fn no_inputs_is_inconclusive_for_the_matroid_method() {
    let sys = fixture("no_inputs");
    let v = certificate_search(&sys, None, &opts()).unwrap();
    assert_eq!(v.status, Status::Inconclusive);
    assert_eq!(pbh_check(&sys, &opts()).status, Status::NotControllable);
}

#[test]
fn partitions_parse_and_validate() {
    let p = RowPartition::parse("1,2;3,4,5", 5).unwrap();
    assert_eq!(p.blocks(), &[vec![0, 1], vec![2, 3, 4]]);
    assert_eq!(p.to_string(), "1,2;3,4,5");
    assert!(RowPartition::parse("1,2;2,3,4,5", 5).is_err());
    assert!(RowPartition::parse("1,2;3", 5).is_err());
    assert!(RowPartition::parse("0,1", 2).is_err());
    assert!(RowPartition::parse("1;2;x", 3).is_err());
}
