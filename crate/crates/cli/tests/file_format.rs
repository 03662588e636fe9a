use proptest::prelude::*;
use rotabaxter::algebra::StructureConstants;
use rotabaxter::catalog;
use rotabaxter::scalar::{int, ratio};
use rotabaxter::Matrix;
use rotabaxter_cli::export::export_entry;
use rotabaxter_cli::file::{AlgebraFile, FileError, ManinBlock, OperatorBlock};

fn field_of(text: &str) -> String {
    match AlgebraFile::from_json(text) {
        Err(FileError::Field { field, .. }) => field,
        other => panic!("expected a field error, got {other:?}"),
    }
}

#[test]
fn catalog_exports_are_canonical() {
    for name in catalog::ENTRIES {
        for w in [int(1), ratio(-3, 2)] {
            let file = export_entry(name, &w).unwrap();
            let text = file.to_json();
            assert!(text.ends_with("}\n"));
            let parsed = AlgebraFile::from_json(&text).unwrap();
            assert_eq!(parsed, file, "{name}");
            assert_eq!(parsed.to_json(), text, "{name}");
        }
    }
}

#[test]
fn non_canonical_input_is_normalized() {
    let messy = r#"{
        "dim": 2, "name": "aff1", "basis": ["x", "y"],
        "brackets": [[0, 1, " 2/2 ", 1], [0, 1, "0", 0]],
        "operator": {"matrix": [["0", "0/5"], ["0", "-4/4"]], "weight": "3/3"}
    }"#;
    let file = AlgebraFile::from_json(messy).unwrap();
    let canonical = file.to_json();
    let expected = r#"{
  "version": 1,
  "name": "aff1",
  "dim": 2,
  "basis": ["x","y"],
  "brackets": [
    [0,1,"1",1]
  ],
  "operator": {
    "weight": "1",
    "matrix": [
      ["0","0"],
      ["0","-1"]
    ]
  }
}
"#;
    assert_eq!(canonical, expected);
    let again = AlgebraFile::from_json(&canonical).unwrap();
    assert_eq!(again.to_json(), canonical);
}

#[test]
fn empty_brackets_serialize_as_empty_array() {
    let text = r#"{"name": "a3", "dim": 3, "basis": ["a", "b", "c"], "brackets": []}"#;
    let file = AlgebraFile::from_json(text).unwrap();
    assert!(file.to_json().contains("\"brackets\": []"));
    assert!(file.algebra().unwrap().is_abelian());
}

#[test]
fn diagnostics_name_the_field() {
    let head = r#""name": "t", "dim": 2, "basis": ["x", "y"]"#;
    let cases = [
        (format!(r#"{{{head}, "brackets": [[1, 0, "1", 1]]}}"#), "brackets[0]"),
        (format!(r#"{{{head}, "brackets": [[0, 1, "1/0", 1]]}}"#), "brackets[0][2]"),
        (format!(r#"{{{head}, "brackets": [[0, 1, "1", 5]]}}"#), "brackets"),
        (format!(r#"{{{head}, "brackets": [[0, 1, "1", 1], [0, 1, "2", 1]]}}"#), "brackets"),
        (format!(r#"{{{head}, "brackets": [], "form": [["1", "0"]]}}"#), "form"),
        (format!(r#"{{{head}, "brackets": [], "rmatrix": [["1", "0"], ["0"]]}}"#), "rmatrix[1]"),
        (format!(r#"{{{head}, "brackets": [], "rmatrix": [["1", "0"], ["0", "q"]]}}"#), "rmatrix[1][1]"),
        (
            format!(r#"{{{head}, "brackets": [], "operator": {{"weight": "w", "matrix": [["0", "0"], ["0", "0"]]}}}}"#),
            "operator.weight",
        ),
        (format!(r#"{{{head}, "brackets": [], "dual_brackets": [[0, 0, "1", 1]]}}"#), "dual_brackets[0]"),
        (
            format!(
                r#"{{{head}, "brackets": [], "manin": {{"first": [["1"], ["0"]], "second": [["0", "1"], ["1", "0"]]}}}}"#
            ),
            "manin",
        ),
        (r#"{"name": "t", "dim": 3, "basis": ["x", "y"], "brackets": []}"#.to_string(), "basis"),
        (r#"{"name": "t", "dim": 2, "basis": ["x", "x"], "brackets": []}"#.to_string(), "basis[1]"),
        (r#"{"version": 9, "name": "t", "dim": 1, "basis": ["x"], "brackets": []}"#.to_string(), "version"),
    ];
    for (text, field) in cases {
        assert_eq!(field_of(&text), field, "{text}");
    }
}

#[test]
fn syntax_errors_carry_the_position() {
    let text = "{\n  \"name\": \"t\",\n  \"dim\": 1,\n  oops\n}";
    match AlgebraFile::from_json(text) {
        Err(FileError::Syntax { line, .. }) => assert_eq!(line, 4),
        other => panic!("{other:?}"),
    }
    let unknown = r#"{"name": "t", "dim": 1, "basis": ["x"], "brackets": [], "colour": 1}"#;
    let message = AlgebraFile::from_json(unknown).unwrap_err().to_string();
    assert!(message.contains("colour"), "{message}");
    let missing = r#"{"name": "t", "dim": 1, "basis": ["x"]}"#;
    assert!(AlgebraFile::from_json(missing).unwrap_err().to_string().contains("brackets"));
}

#[test]
fn jacobi_violations_still_parse() {
    let text = r#"{"name": "bad", "dim": 3, "basis": ["h", "e", "f"],
        "brackets": [[0, 1, "3", 1], [0, 2, "-2", 2], [1, 2, "1", 0]]}"#;
    let file = AlgebraFile::from_json(text).unwrap();
    assert!(file.algebra().is_err());
    assert_eq!(file.constants.get(1, 0, 1), &int(-3));
}

fn rational() -> impl Strategy<Value = rotabaxter::Scalar> {
    (-6i64..=6, 1i64..=4).prop_map(|(p, q)| ratio(p, q))
}

fn square(n: usize) -> impl Strategy<Value = Matrix> {
    proptest::collection::vec(rational(), n * n).prop_map(move |v| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone()))
}

fn constants(n: usize) -> impl Strategy<Value = StructureConstants> {
    proptest::collection::vec(rational(), n * n * n).prop_map(move |v| {
        let mut c = StructureConstants::zeros(n);
        for i in 0..n {
            for j in i + 1..n {
                for k in 0..n {
                    let value = v[(i * n + j) * n + k].clone();
                    c.set(j, i, k, -&value);
                    c.set(i, j, k, value);
                }
            }
        }
        c
    })
}

fn any_file() -> impl Strategy<Value = AlgebraFile> {
    (1usize..=4).prop_flat_map(|n| {
        (
            constants(n),
            proptest::option::of((square(n), rational())),
            proptest::option::of(square(n)),
            proptest::option::of(square(n)),
            proptest::option::of(constants(n)),
            proptest::option::of((0..=n).prop_flat_map(move |k| {
                (proptest::collection::vec(rational(), n * k), proptest::collection::vec(rational(), n * (n - k)))
                    .prop_map(move |(a, b)| ManinBlock {
                        first: Matrix::from_fn(n, k, |i, j| a[i * k + j].clone()),
                        second: Matrix::from_fn(n, n - k, |i, j| b[i * (n - k) + j].clone()),
                    })
            })),
        )
            .prop_map(move |(constants, op, form, rmatrix, dual, manin)| AlgebraFile {
                name: format!("random{n}"),
                basis: (0..n).map(|i| format!("b{i}")).collect(),
                constants,
                operator: op.map(|(matrix, weight)| OperatorBlock { matrix, weight }),
                form,
                rmatrix,
                dual_constants: dual,
                manin,
            })
    })
}

proptest! {
    #[test]
    fn parse_inverts_serialize(file in any_file()) {
        let text = file.to_json();
        let parsed = AlgebraFile::from_json(&text).unwrap();
        prop_assert_eq!(&parsed, &file);
        prop_assert_eq!(parsed.to_json(), text);
    }

    #[test]
    fn reordered_brackets_canonicalize_identically(file in any_file()) {
        // The same brackets listed in reverse order with an explicit zero.
        let mut value: serde_json::Value = serde_json::from_str(&file.to_json()).unwrap();
        let brackets = value["brackets"].as_array_mut().unwrap();
        brackets.reverse();
        if file.dim() >= 2 && !brackets.iter().any(|b| b[0] == 0 && b[1] == 1 && b[3] == 0) {
            brackets.push(serde_json::json!([0, 1, "0/7", 0]));
        }
        let shuffled = AlgebraFile::from_json(&value.to_string()).unwrap();
        prop_assert_eq!(shuffled.to_json(), file.to_json());
    }
}
