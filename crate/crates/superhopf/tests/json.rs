use superhopf::catalog::build_named;
use superhopf::json::*;
use superhopf::linalg::Matrix;
use superhopf::{CycRational as Q, Field};

#[test]
fn round_trip_is_identity() {
    for name in ["Taft_2", "A^(14)", "H_8^(18)", "Taft_5", "AN(omega,p,0)"] {
        let h = build_named::<Q>(name, Some(3)).unwrap().hopf;
        let text = serialize(&h);
        let back: superhopf::Hopf = deserialize(&text).unwrap();
        assert_eq!(back, h, "{}", name);
        // the strings themselves are reproduced
        assert_eq!(serialize(&back), text, "{}", name);
    }
}

#[test]
fn parity_violation_is_structural() {
    let h = build_named::<Q>("H_4^(1)", None).unwrap().hopf;
    let mut doc = to_doc(&h);
    let odd = h.parity().iter().position(|&p| p == 1).unwrap();
    // e_0 · e_0 now lands on an odd vector
    doc.mult.push((0, 0, odd, "1 @1".into()));
    let err = from_doc::<Q>(&doc).unwrap_err();
    assert!(err.is_structural(), "{}", err);
    assert!(matches!(err, JsonError::Structure { ref path, .. } if path.starts_with("/mult/")), "{}", err);
}

#[test]
fn schema_errors_carry_paths() {
    let h = build_named::<Q>("ext1", None).unwrap().hopf;
    let mut doc = to_doc(&h);
    doc.unit[1] = "1/0 @1".into();
    match from_doc::<Q>(&doc) {
        Err(JsonError::Schema { path, .. }) => assert_eq!(path, "/unit/1"),
        other => panic!("{:?}", other.map(|_| ())),
    }
    let text = serialize(&h).replacen("\"dim\": 2", "\"dim\": \"two\"", 1);
    match deserialize::<Q>(&text) {
        Err(JsonError::Schema { path, .. }) => assert_eq!(path, "dim"),
        other => panic!("{:?}", other.map(|_| ())),
    }
    let mut doc = to_doc(&h);
    doc.parity.pop();
    assert!(matches!(from_doc::<Q>(&doc), Err(JsonError::Schema { .. })));
}

#[test]
fn out_of_range_index_is_structural() {
    let h = build_named::<Q>("ext1", None).unwrap().hopf;
    let mut doc = to_doc(&h);
    doc.comult.push((0, 0, 7, "1 @1".into()));
    assert!(from_doc::<Q>(&doc).unwrap_err().is_structural());
}

#[test]
fn matrices_round_trip() {
    let m = Matrix::from_rows(
        vec![vec![Q::from_ratio(1, 3), Q::zeta(4, 1)], vec![-Q::zeta(12, 5), Q::from_ratio(-7, 2)]],
        2,
    );
    let text = serialize_matrix(&m);
    assert_eq!(deserialize_matrix::<Q>(&text).unwrap(), m);
}
