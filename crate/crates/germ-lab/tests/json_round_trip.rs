//! Serialization round-trips for every exported data type:
//! `parse(serialize(x)) == x`.

use germ_lab::blowup::{resolve, Resolution, SbarRecord};
use germ_lab::chains::{hj_expand, orbit_chain, CenteredChain, WeightedChain};
use germ_lab::diophantine::{extend_to_8, pr_inverse, DecoratedOrbit, DioSol4, ExtSol8};
use germ_lab::monodromy::{classify, enumerate_monodromy, GermClass, MonodromyDatum, Perm};
use germ_lab::orbit::{path_to_root, Orbit, TreePath};
use germ_lab::verify::{run_suite, VerifyReport};

fn round_trip<T>(value: &T)
where
    T: serde::Serialize + serde::de::DeserializeOwned + PartialEq + std::fmt::Debug,
{
    let text = serde_json::to_string(value).expect("serializes");
    let back: T = serde_json::from_str(&text).expect("parses back");
    assert_eq!(&back, value, "round trip changed the value: {text}");
}

#[test]
fn all_exported_types_round_trip() {
    let orbit = Orbit::new(8, 5).unwrap();
    round_trip::<Orbit>(&orbit);
    round_trip::<TreePath>(&path_to_root(&orbit).unwrap());

    let decorated = pr_inverse(&orbit).unwrap();
    round_trip::<DecoratedOrbit>(&decorated);
    round_trip::<DioSol4>(&decorated.as_sol());
    round_trip::<ExtSol8>(&extend_to_8(&decorated.as_sol()).unwrap());

    round_trip::<WeightedChain>(&hj_expand(12, 5).unwrap());
    round_trip::<CenteredChain>(&orbit_chain(&decorated).unwrap());

    let resolution = resolve(8, 5).unwrap();
    round_trip::<Resolution>(&resolution);
    round_trip::<SbarRecord>(&resolution.sbar);

    round_trip::<Perm>(&Perm::from_cycle_lengths(6, &[4, 2]).unwrap());
    let classes = enumerate_monodromy(5, 6, 5).unwrap();
    round_trip::<MonodromyDatum>(&classes[0]);
    round_trip::<GermClass>(&classify(6, 5).unwrap());
    round_trip::<GermClass>(&classify(5, 3).unwrap());

    round_trip::<VerifyReport>(&run_suite("quotient-delta", Some(10)).unwrap());
}

#[test]
fn invariant_carrying_types_reject_bad_documents() {
    assert!(serde_json::from_str::<Orbit>(r#"{"k1":6,"k2":4}"#).is_err());
    assert!(serde_json::from_str::<DioSol4>(r#"{"k1":5,"k2":2,"q1":1,"q2":2}"#).is_err());
    assert!(serde_json::from_str::<Perm>("[0,0,1]").is_err());
    assert!(serde_json::from_str::<ExtSol8>(
        r#"{"k1":5,"k2":3,"q1":3,"q2":1,"q3":2,"q4":13,"m1":2,"m2":4}"#
    )
    .is_err());
}
