use std::collections::BTreeSet;
use std::path::PathBuf;

use bei_multidegree::census::{read_graph6_file, run_census, CensusSource};
use bei_multidegree::engine::family_multidegree;
use bei_multidegree::graph::{canonical_form, generate_connected, Family};
use bei_multidegree::multidegree;
use num_bigint::BigInt;

fn fixture(name: &str) -> PathBuf {
    [env!("CARGO_MANIFEST_DIR"), "tests", "data", name].iter().collect()
}

#[test]
fn built_in_order_seven_matches_the_reference_list() {
    let ours: BTreeSet<Vec<u8>> = generate_connected(7).unwrap().iter().map(canonical_form).collect();
    let theirs: BTreeSet<Vec<u8>> =
        read_graph6_file(&fixture("connected_7.g6")).unwrap().iter().map(|(_, g)| canonical_form(g)).collect();
    assert_eq!(ours.len(), 853);
    assert_eq!(ours, theirs);
}

#[test]
fn reference_list_for_order_eight_is_connected_and_distinct() {
    let graphs = read_graph6_file(&fixture("connected_8.g6")).unwrap();
    assert!(graphs.iter().all(|(_, g)| g.is_connected() && g.order() == 8));
    let forms: BTreeSet<Vec<u8>> = graphs.iter().map(|(_, g)| canonical_form(g)).collect();
    assert_eq!(forms.len(), graphs.len());
}

#[test]
fn file_and_builtin_census_agree() {
    let (a, sa) = run_census(&CensusSource::Builtin(7), 0).unwrap();
    let (b, sb) = run_census(&CensusSource::Graph6File(fixture("connected_7.g6")), 0).unwrap();
    assert_eq!(sa, sb);
    let polys = |rs: &[bei_multidegree::census::CensusRecord]| {
        let mut v: Vec<String> = rs.iter().map(|r| r.multidegree.to_string()).collect();
        v.sort();
        v
    };
    assert_eq!(polys(&a), polys(&b));
}

#[test]
fn horned_graphs_have_growing_leading_coefficient() {
    for n in 1..=7 {
        let g = Family::HornedComplete(n).build().unwrap();
        let md = multidegree(&g).unwrap().poly;
        assert_eq!(md.leading_coefficient().unwrap(), BigInt::from(n));
    }
}

#[test]
fn closed_forms_match_the_engine() {
    let mut fams = vec![];
    for n in 1..=9 {
        fams.extend([Family::Path(n), Family::Complete(n), Family::Star(n), Family::HornedComplete(n.min(5))]);
        fams.push(Family::Friendship(n));
    }
    for n in 3..=9 {
        fams.extend([Family::Cycle(n), Family::Barbell(n)]);
    }
    for n in 4..=12 {
        fams.push(Family::Wheel(n));
    }
    for n in 2..=6 {
        for m in 1..=4 {
            fams.push(Family::Windmill(n, m));
        }
    }
    for f in fams {
        let engine = multidegree(&f.build().unwrap()).unwrap().poly;
        assert_eq!(family_multidegree(f).unwrap(), engine, "{f}");
    }
}
