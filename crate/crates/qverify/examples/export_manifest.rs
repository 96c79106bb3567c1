//! Writes the built-in catalog as a JSON manifest (kept in sync with
//! manifests/default.json by a test).

fn main() {
    let cat = qverify::catalog::default_catalog();
    println!("{}", serde_json::to_string_pretty(&cat).unwrap());
}
