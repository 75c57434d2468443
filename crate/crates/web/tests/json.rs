use facepair_web::{analyze_json, covering_json, table_json};

#[test]
fn analyze_reports_census_and_band() {
    let v = analyze_json("m25", 4).unwrap();
    assert_eq!(v["sigma"], serde_json::json!([2, 14, 13, 1]));
    assert_eq!(v["h1"], "Z3 + Z3 + Z6");
    assert_eq!(v["band"]["edges"].as_array().unwrap().len(), 40);
    assert_eq!(v["edgeClasses"].as_array().unwrap().len(), 14);
    let max_class = v["band"]["edges"].as_array().unwrap().iter().map(|e| e["class"].as_u64().unwrap()).max();
    assert_eq!(max_class, Some(13));
}

#[test]
fn seam_edges_stay_short() {
    let v = analyze_json("m24", 7).unwrap();
    for e in v["band"]["edges"].as_array().unwrap() {
        let dx = e["from"][0].as_f64().unwrap() - e["to"][0].as_f64().unwrap();
        assert!(dx.abs() <= 1.0, "{e}");
    }
}

#[test]
fn covering_defaults_to_table_step() {
    let v = covering_json("m25", 6, 0).unwrap();
    assert_eq!(v["step"], 2);
    assert_eq!(v["degree"], 3);
    assert_eq!(v["components"].as_array().unwrap().len(), 3);
    assert_eq!(v["base"], "m25(2)");
}

#[test]
fn table_and_errors() {
    let rows = table_json("m24", 3, 6).unwrap();
    let h: Vec<&str> = rows.as_array().unwrap().iter().map(|r| r["h1"].as_str().unwrap()).collect();
    assert_eq!(h, vec!["Z9", "Z3 + Z12", "Z5 + Z5 + Z15", "Z3 + Z9 + Z18"]);
    assert!(analyze_json("m26", 3).is_err());
    assert!(analyze_json("m24", 0).is_err());
    assert!(covering_json("m25", 5, 2).is_err());
}
