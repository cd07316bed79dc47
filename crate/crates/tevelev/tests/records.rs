use proptest::prelude::*;
use tevelev::{compute, format_profiles, parse_profiles, render, EngineChoice, Format, Record};
use tevelev_core::TevelevProblem;

fn problem() -> impl Strategy<Value = TevelevProblem> {
    let profile = prop::collection::vec(1u32..=4, 1..=3);
    (0u32..=8, -4i64..=5, prop::collection::vec(profile, 0..=3))
        .prop_map(|(g, ell, p)| TevelevProblem::new(g, ell, p).unwrap())
}

fn engine() -> impl Strategy<Value = EngineChoice> {
    prop_oneof![
        Just(EngineChoice::All),
        Just(EngineChoice::Closed),
        Just(EngineChoice::Recursion),
        Just(EngineChoice::Schubert),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(128))]

    #[test]
    fn json_round_trip_recomputes_identically(p in problem(), e in engine()) {
        let record = compute(&p, e);
        prop_assert!(record.agree);
        let text = render(std::slice::from_ref(&record), Format::Json);
        let back: Record = serde_json::from_str(&text).unwrap();
        prop_assert_eq!(&back, &record);
        prop_assert_eq!(compute(&back.problem().unwrap(), back.engines.choice()), record);
    }

    #[test]
    fn profile_text_round_trips(profiles in prop::collection::vec(prop::collection::vec(1u32..=50, 1..=4), 0..=4)) {
        prop_assert_eq!(parse_profiles(&format_profiles(&profiles)).unwrap(), profiles);
    }

    #[test]
    fn invalid_records_are_zero(p in problem()) {
        let record = compute(&p, EngineChoice::All);
        if !record.valid {
            prop_assert_eq!(record.value.as_str(), "0");
            prop_assert!(!record.violated.is_empty());
        }
    }
}
