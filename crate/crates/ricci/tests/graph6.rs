use proptest::prelude::*;
use ricci::graph6::*;
use ricci_core::families::{gen_cycle, gen_particular, gen_prism};
use ricci_core::WeightScheme;

/// Straight from the format description: size byte(s), then the upper
/// triangle column by column as a '0'/'1' string padded to a multiple of six.
fn reference_encode(n: usize, edges: &[(usize, usize)]) -> String {
    let mut out = String::new();
    if n < 63 {
        out.push((63 + n as u8) as char);
    } else {
        out.push('~');
        for shift in [12, 6, 0] {
            out.push((63 + ((n >> shift) & 63) as u8) as char);
        }
    }
    let mut bits = String::new();
    for j in 1..n {
        for i in 0..j {
            let e = edges.iter().any(|&(a, b)| (a, b) == (i, j) || (a, b) == (j, i));
            bits.push(if e { '1' } else { '0' });
        }
    }
    while !bits.len().is_multiple_of(6) {
        bits.push('0');
    }
    for chunk in bits.as_bytes().chunks(6) {
        let v = u8::from_str_radix(std::str::from_utf8(chunk).unwrap(), 2).unwrap();
        out.push((63 + v) as char);
    }
    out
}

fn simple_graph() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
    (1usize..80).prop_flat_map(|n| {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
        let m = pairs.len();
        (Just(n), proptest::sample::subsequence(pairs, 0..=m.min(60)))
    })
}

proptest! {
    #[test]
    fn encoder_matches_reference((n, edges) in simple_graph()) {
        prop_assert_eq!(encode(n, &edges), reference_encode(n, &edges));
    }

    #[test]
    fn decode_inverts_encode((n, edges) in simple_graph()) {
        let (m, mut back) = decode(&encode(n, &edges)).unwrap();
        let mut want: Vec<_> = edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
        back.sort();
        want.sort();
        prop_assert_eq!(m, n);
        prop_assert_eq!(back, want);
    }

    #[test]
    fn header_and_newline_are_accepted((n, edges) in simple_graph()) {
        let text = format!(">>graph6<<{}\n", encode(n, &edges));
        prop_assert_eq!(decode(&text).unwrap().0, n);
    }
}

#[test]
fn known_strings() {
    assert_eq!(encode(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]), "C~");
    assert_eq!(encode(1, &[]), "@");
    assert_eq!(encode(0, &[]), "?");
}

#[test]
fn family_members_round_trip() {
    for g in [gen_cycle(12).unwrap(), gen_prism(10).unwrap(), gen_particular().unwrap()] {
        let h = parse_graph6(&emit_graph6(&g), WeightScheme::Combinatorial).unwrap();
        assert_eq!(g.edges(), h.edges());
    }
}

#[test]
fn malformed_input_is_rejected() {
    assert!(decode("").is_err());
    assert!(decode("C~~").is_err());
    assert!(decode("C").is_err());
    assert!(decode("C\u{7f}").is_err());
}
