mod common;

use std::io::Cursor;
use std::path::Path;

use embred::core::EmbeddingMatrix;
use embred::embeddings::{read_embeddings, save_embeddings, load_embeddings, write_embeddings};
use proptest::prelude::*;

fn matrix(rows: Vec<Vec<f32>>) -> EmbeddingMatrix {
    EmbeddingMatrix::from_rows(rows.into_iter().enumerate().map(|(i, r)| (format!("tok{i}"), r))).unwrap()
}

fn round_trip(m: &EmbeddingMatrix, precision: usize) -> EmbeddingMatrix {
    let mut buf = Vec::new();
    write_embeddings(m, &mut buf, precision).unwrap();
    read_embeddings(Cursor::new(buf), Some(m.dim()), Path::new("mem")).unwrap().0
}

fn rows_strategy() -> impl Strategy<Value = Vec<Vec<f32>>> {
    (1usize..6).prop_flat_map(|dim| {
        prop::collection::vec(prop::collection::vec(-1e3f32..1e3, dim), 1..20)
    })
}

proptest! {
    #[test]
    fn exact_precision_is_bit_identical(rows in rows_strategy()) {
        let m = matrix(rows);
        let back = round_trip(&m, 17);
        prop_assert_eq!(back.vocab(), m.vocab());
        let same = back.data().iter().zip(m.data()).all(|(a, b)| a.to_bits() == b.to_bits());
        prop_assert!(same);
    }

    #[test]
    fn fixed_precision_error_bound(rows in rows_strategy(), precision in 2usize..9) {
        let m = matrix(rows);
        let back = round_trip(&m, precision);
        prop_assert_eq!(back.vocab().words(), m.vocab().words());
        // f32 spacing near 1e3 adds up to 6.1e-5 on top of the rounding
        let bound = 10f64.powi(1 - precision as i32) + 1e-4;
        for (a, b) in back.data().iter().zip(m.data()) {
            prop_assert!(((a - b) as f64).abs() <= bound);
        }
    }
}

#[test]
fn save_then_load_small_matrix() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("m.txt");
    let m = matrix(vec![vec![0.123_456_79, -1.0], vec![3.5e-3, 2.25e4]]);
    save_embeddings(&m, &path, 6).unwrap();
    let (back, _) = load_embeddings(&path, None).unwrap();
    let worst = back.data().iter().zip(m.data()).map(|(a, b)| (a - b).abs()).fold(0.0, f32::max);
    assert!(worst <= 1e-5);
    for (i, w) in back.vocab().words().iter().enumerate() {
        assert_eq!(back.lookup(w), Some(back.row(i)));
    }
}
