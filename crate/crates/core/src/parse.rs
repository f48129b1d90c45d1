//! Text forms of elements and partitions.
//!
//! Elements: `id`, a reduced word (`s1 s0`, `s1s0`, `1,0`, `1 0`), or a
//! window (`[-1,4]`, Unicode minus accepted). Partitions: `(2,1)`, `2,1`,
//! `2 1`, `[2,1]`, `()`.

use crate::affine_perm::AffinePerm;
use crate::error::{Error, Result};
use crate::symfunc::Partition;

fn normalize_minus(text: &str) -> String {
    text.trim().replace(['\u{2212}', '\u{2013}'], "-")
}

fn parse_int<T: std::str::FromStr>(token: &str, what: &str) -> Result<T> {
    token
        .parse()
        .map_err(|_| Error::Parse(format!("{what}: cannot read {token:?} as an integer")))
}

fn split_list(body: &str) -> impl Iterator<Item = &str> {
    body.split(|c: char| c == ',' || c.is_whitespace())
        .filter(|t| !t.is_empty())
}

/// Parses an element of `W_af` of rank `n`.
pub fn parse_element(n: usize, text: &str) -> Result<AffinePerm> {
    let text = normalize_minus(text);
    if matches!(text.as_str(), "" | "id" | "e") {
        return Ok(AffinePerm::identity(n));
    }
    if let Some(body) = text.strip_prefix('[') {
        let body = body
            .strip_suffix(']')
            .ok_or_else(|| Error::Parse(format!("window {text:?} is missing its closing ']'")))?;
        let window = split_list(body)
            .map(|t| parse_int::<i64>(t, "window entry"))
            .collect::<Result<Vec<_>>>()?;
        if window.len() != n {
            return Err(Error::Parse(format!(
                "window {text} has {} entries but the rank is {n}",
                window.len()
            )));
        }
        return AffinePerm::from_window(window);
    }
    let letters = text
        .split(|c: char| c == ',' || c == 's' || c == '_' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| parse_int::<usize>(t, "word letter"))
        .collect::<Result<Vec<_>>>()?;
    let w = AffinePerm::from_word(n, &letters)?;
    if w.length() != letters.len() {
        return Err(Error::Parse(format!(
            "word {text:?} is not reduced: it has {} letters but the element has length {}",
            letters.len(),
            w.length()
        )));
    }
    Ok(w)
}

/// Parses a partition; parts must be positive and weakly decreasing.
pub fn parse_partition(text: &str) -> Result<Partition> {
    let text = text.trim();
    let body = text
        .strip_prefix('(')
        .and_then(|b| b.strip_suffix(')'))
        .or_else(|| text.strip_prefix('[').and_then(|b| b.strip_suffix(']')))
        .unwrap_or(text);
    let parts = split_list(body)
        .map(|t| parse_int::<usize>(t, "partition part"))
        .collect::<Result<Vec<_>>>()?;
    if parts.contains(&0) {
        return Err(Error::Parse(format!("partition {text:?} has a zero part")));
    }
    if parts.windows(2).any(|p| p[0] < p[1]) {
        return Err(Error::Parse(format!(
            "partition {text:?} is not weakly decreasing"
        )));
    }
    Ok(Partition::new(parts))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::affine_perm::elements_up_to_length;
    use proptest::prelude::*;

    #[test]
    fn element_forms() {
        let w = AffinePerm::from_window(vec![-1, 4]).unwrap();
        for text in [
            "s1 s0",
            "s1s0",
            "1,0",
            "1 0",
            "s_1 s_0",
            "[-1,4]",
            "[\u{2212}1, 4]",
            " [-1 4] ",
        ] {
            assert_eq!(parse_element(2, text).unwrap(), w, "{text}");
        }
        assert_eq!(
            parse_element(2, "[0,3]").unwrap(),
            AffinePerm::generator(2, 0).unwrap()
        );
        assert!(parse_element(3, "id").unwrap().is_identity());
        assert!(parse_element(3, "").unwrap().is_identity());
    }

    #[test]
    fn element_errors_name_the_invariant() {
        let e = parse_element(2, "[1,3]").unwrap_err().to_string();
        assert!(e.contains("sum of w(i) - i is 1"), "{e}");
        let e = parse_element(2, "[1,3").unwrap_err().to_string();
        assert!(e.contains("closing"), "{e}");
        let e = parse_element(3, "[1,2]").unwrap_err().to_string();
        assert!(e.contains("rank is 3"), "{e}");
        let e = parse_element(2, "s1 s1").unwrap_err().to_string();
        assert!(e.contains("not reduced"), "{e}");
        assert_eq!(
            parse_element(2, "s2"),
            Err(Error::LetterOutOfRange { index: 2, n: 2 })
        );
        assert!(parse_element(2, "sx").is_err());
        assert!(parse_element(2, "[1,x]").is_err());
    }

    #[test]
    fn elements_round_trip() {
        for n in 2..=4 {
            for w in elements_up_to_length(n, 4) {
                assert_eq!(parse_element(n, &w.word_string()).unwrap(), w);
                assert_eq!(parse_element(n, &w.to_string()).unwrap(), w);
            }
        }
    }

    #[test]
    fn partition_forms() {
        let p = Partition::new(vec![2, 1]);
        for text in ["(2,1)", "2,1", "2 1", "[2, 1]"] {
            assert_eq!(parse_partition(text).unwrap(), p);
        }
        assert_eq!(parse_partition("()").unwrap(), Partition::empty());
        assert_eq!(parse_partition("").unwrap(), Partition::empty());
        assert!(parse_partition("1,2")
            .unwrap_err()
            .to_string()
            .contains("weakly decreasing"));
        assert!(parse_partition("2,0")
            .unwrap_err()
            .to_string()
            .contains("zero part"));
    }

    proptest! {
        #[test]
        fn partitions_round_trip(mut parts in prop::collection::vec(1usize..6, 0..6)) {
            parts.sort_unstable_by(|a, b| b.cmp(a));
            let p = Partition::new(parts);
            prop_assert_eq!(parse_partition(&p.to_string()).unwrap(), p);
        }

        #[test]
        fn words_round_trip(n in 2usize..5, letters in prop::collection::vec(0usize..4, 0..8)) {
            let letters: Vec<usize> = letters.into_iter().map(|i| i % n).collect();
            let w = AffinePerm::from_word(n, &letters).unwrap();
            prop_assert_eq!(parse_element(n, &w.word_string()).unwrap(), w.clone());
            prop_assert_eq!(parse_element(n, &w.to_string()).unwrap(), w);
        }
    }
}
