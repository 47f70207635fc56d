use cox_core::coxcore::{CoxeterGroup, GenMap};
use cox_core::pieces::{all_triple_pairs, verify_orbit_pieces, PairSpace};

fn assert_all(verdicts: Vec<cox_core::verdict::Verdict>) {
    for v in verdicts {
        assert!(v.pass, "{} on {}: {:?}", v.check, v.scope, v.counterexample);
    }
}

fn sequences_on(t1: &str, t2: &str) {
    let g1 = CoxeterGroup::parse(t1).unwrap();
    let g2 = CoxeterGroup::parse(t2).unwrap();
    for (c, cp) in all_triple_pairs(&g1, &g2) {
        let sp = PairSpace::new(&g1, &g2, c.clone(), cp.clone()).unwrap();
        assert_all(sp.verify_sequences(&format!("{t1}x{t2} c={c} c'={cp}")));
    }
}

#[test]
fn sequences_a2_a2() {
    sequences_on("A2", "A2");
}

#[test]
fn sequences_a1_b2() {
    sequences_on("A1", "B2");
}

fn orbit_case(t: &str, delta: &str, j: &str) {
    let g = CoxeterGroup::parse(t).unwrap();
    let r = g.rank();
    let js = cox_core::GenSet::parse(j, r).unwrap();
    let d = GenMap::parse(delta, r, r, js).unwrap();
    assert_all(verify_orbit_pieces(&g, &d, t));
    let sp = PairSpace::for_parabolic_action(&g, d).unwrap();
    assert_all(sp.verify_pieces(t));
}

#[test]
fn pieces_a2() {
    orbit_case("A2", "1:1", "1");
}

#[test]
fn pieces_a3_shifted() {
    orbit_case("A3", "1:2,2:3", "1,2");
}

#[test]
fn pieces_b3() {
    orbit_case("B3", "id", "1,2");
}
