use knotkit_web::{axioms_json, homology_text, parse_birack, report_json};

#[test]
fn homology_in_the_page() {
    assert_eq!(homology_text("q3", 3, "Q").unwrap(), "Z_3");
    // H1 is free on the orbits: three for a trivial action, one for Q3
    assert_eq!(homology_text(" i3 ", 1, "br").unwrap(), "Z^3");
    assert_eq!(homology_text("q3", 1, "BR").unwrap(), "Z");
    assert!(homology_text("q3", 9, "Q").unwrap_err().contains("too large"));
    assert!(homology_text("bq21", 2, "Q").is_err());
    assert!(homology_text("q3", 2, "XYZ").is_err());
}

#[test]
fn report_of_catalog_diagram() {
    let v: serde_json::Value = serde_json::from_str(&report_json("trefoil_l").unwrap()).unwrap();
    assert_eq!(v["writhe"], -3);
    assert_eq!(v["colour_counts"]["Q33"], 9);
    assert!(report_json("granny").is_err());
}

#[test]
fn axioms_from_name_or_json() {
    let doubled = parse_birack("bq21").unwrap().double().unwrap().to_json();
    let v: serde_json::Value = serde_json::from_str(&axioms_json(&doubled).unwrap()).unwrap();
    assert_eq!(v["total"], false);
    let q: serde_json::Value = serde_json::from_str(&axioms_json("q3").unwrap()).unwrap();
    assert_eq!(q["class"], "quandle");
}
