//! Text formats for games, tables, imputations, and command-line lists.
//!
//! Two file formats carry games. A product game file starts with the magic
//! line `cpg 1`, then a player count, then that many weights:
//!
//! ```text
//! cpg 1
//! 3
//! 2 3 5
//! ```
//!
//! A tabulated game file starts with `tug 1`, then a player count n, then
//! exactly 2^n lines of `MASK VALUE`, one per coalition, in any order. The
//! mask is the coalition's binary encoding in decimal (player 1 is the
//! lowest bit) and the value is an exact rational:
//!
//! ```text
//! tug 1
//! 2
//! 0 0
//! 1 1
//! 2 1
//! 3 1
//! ```
//!
//! In both formats, lines whose first non-blank character is `#` are
//! comments and blank lines are skipped; error positions refer to physical
//! 1-based line numbers. Imputation text is simply whitespace-separated
//! rationals, each `p` or `p/q` in decimal with an optional leading `-`.

use crate::limits::MASK_LIMIT;
use crate::model::CpGame;
use crate::solutions::Imputation;
use crate::verify::TableGame;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use std::fmt::Write as _;
use thiserror::Error;

/// Everything that can go wrong while reading the text formats.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParseError {
    #[error("line {line}: expected `{expected}`, found `{found}`")]
    BadMagic {
        line: usize,
        expected: &'static str,
        found: String,
    },
    #[error("unexpected end of input: expected {expected}")]
    UnexpectedEnd { expected: &'static str },
    #[error("line {line}: `{token}` is not an integer")]
    NotAnInteger { line: usize, token: String },
    #[error("`{token}` is not a rational (`p` or `p/q`)")]
    BadRational { token: String },
    #[error("expected {expected} {what}, found {got}")]
    CountMismatch {
        what: &'static str,
        expected: usize,
        got: usize,
    },
    #[error("line {line}: weight {value} is below the minimum of 2")]
    InvalidWeight { line: usize, value: BigInt },
    #[error("payoffs sum to {sum}, the grand coalition is worth {expected}")]
    NotEfficient { sum: BigRational, expected: BigInt },
    #[error("line {line}: a game needs at least one player")]
    NoPlayers { line: usize },
    #[error("line {line}: {n} players exceed the table cap of {limit}")]
    TableTooLarge { line: usize, n: usize, limit: usize },
    #[error("line {line}: expected `MASK VALUE`")]
    BadTableLine { line: usize },
    #[error("line {line}: mask {mask} is out of range for {n} players")]
    MaskOutOfRange { line: usize, mask: u64, n: usize },
    #[error("line {line}: duplicate mask {mask}")]
    DuplicateMask { line: usize, mask: u64 },
    #[error("`{token}` is not a player index")]
    BadIndex { token: String },
    #[error("`{segment}` is not a `PERM@COEF` mixture term")]
    BadMixTerm { segment: String },
}

/// Either file format, distinguished by its magic line.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum AnyGame {
    Product(CpGame),
    Table(TableGame),
}

/// 1-based physical line numbers, comments and blank lines dropped.
fn significant_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(index, line)| (index + 1, line))
        .filter(|(_, line)| {
            let body = line.trim_start();
            !body.is_empty() && !body.starts_with('#')
        })
}

fn expect_magic<'a, I>(lines: &mut I, expected: &'static str) -> Result<(), ParseError>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let (line, content) = lines.next().ok_or(ParseError::UnexpectedEnd {
        expected: "a magic line",
    })?;
    if content.trim() != expected {
        return Err(ParseError::BadMagic {
            line,
            expected,
            found: content.trim().to_string(),
        });
    }
    Ok(())
}

fn expect_player_count<'a, I>(lines: &mut I) -> Result<(usize, usize), ParseError>
where
    I: Iterator<Item = (usize, &'a str)>,
{
    let (line, content) = lines.next().ok_or(ParseError::UnexpectedEnd {
        expected: "a player count",
    })?;
    let token = content.trim();
    let n: usize = token.parse().map_err(|_| ParseError::NotAnInteger {
        line,
        token: token.to_string(),
    })?;
    if n == 0 {
        return Err(ParseError::NoPlayers { line });
    }
    Ok((line, n))
}

/// Reads a product game file (`cpg 1`).
pub fn parse_game(text: &str) -> Result<CpGame, ParseError> {
    let mut lines = significant_lines(text);
    expect_magic(&mut lines, "cpg 1")?;
    let (_, n) = expect_player_count(&mut lines)?;

    let tokens: Vec<(usize, &str)> = lines
        .flat_map(|(line, content)| content.split_whitespace().map(move |t| (line, t)))
        .collect();
    if tokens.len() != n {
        return Err(ParseError::CountMismatch {
            what: "weights",
            expected: n,
            got: tokens.len(),
        });
    }
    let mut weights = Vec::with_capacity(n);
    for (line, token) in tokens {
        let value: BigInt = token.parse().map_err(|_| ParseError::NotAnInteger {
            line,
            token: token.to_string(),
        })?;
        if value < BigInt::from(2) {
            return Err(ParseError::InvalidWeight { line, value });
        }
        weights.push(value);
    }
    Ok(CpGame::new(weights).expect("weights validated above"))
}

/// The canonical form of a product game file: magic, count, one weight line.
///
/// Rendering and re-parsing reproduces an equal game.
pub fn render_game(game: &CpGame) -> String {
    let mut out = format!("cpg 1\n{}\n", game.player_count());
    for (k, w) in game.weights().iter().enumerate() {
        if k > 0 {
            out.push(' ');
        }
        let _ = write!(out, "{w}");
    }
    out.push('\n');
    out
}

/// Reads a tabulated game file (`tug 1`).
pub fn parse_table(text: &str) -> Result<TableGame, ParseError> {
    let mut lines = significant_lines(text);
    expect_magic(&mut lines, "tug 1")?;
    let (count_line, n) = expect_player_count(&mut lines)?;
    if n > MASK_LIMIT {
        return Err(ParseError::TableTooLarge {
            line: count_line,
            n,
            limit: MASK_LIMIT,
        });
    }

    let mut entries: Vec<(usize, u64, BigRational)> = Vec::new();
    for (line, content) in lines {
        let mut parts = content.split_whitespace();
        let (mask_token, value_token) = match (parts.next(), parts.next(), parts.next()) {
            (Some(m), Some(v), None) => (m, v),
            _ => return Err(ParseError::BadTableLine { line }),
        };
        let mask: u64 = mask_token.parse().map_err(|_| ParseError::NotAnInteger {
            line,
            token: mask_token.to_string(),
        })?;
        if mask >> n != 0 {
            return Err(ParseError::MaskOutOfRange { line, mask, n });
        }
        let value = parse_rational(value_token)?;
        entries.push((line, mask, value));
    }

    let expected = 1usize << n;
    if entries.len() != expected {
        return Err(ParseError::CountMismatch {
            what: "table entries",
            expected,
            got: entries.len(),
        });
    }
    let mut slots: Vec<Option<BigRational>> = vec![None; expected];
    for (line, mask, value) in entries {
        let slot = &mut slots[mask as usize];
        if slot.is_some() {
            return Err(ParseError::DuplicateMask { line, mask });
        }
        *slot = Some(value);
    }
    let values = slots
        .into_iter()
        .map(|slot| slot.expect("exact count and no duplicates fill every mask"))
        .collect();
    Ok(TableGame::new(n, values).expect("dimensions validated above"))
}

/// The canonical form of a table file: entries in ascending mask order.
pub fn render_table(table: &TableGame) -> String {
    let mut out = format!("tug 1\n{}\n", table.player_count());
    for (mask, value) in table.values().iter().enumerate() {
        let _ = writeln!(out, "{mask} {value}");
    }
    out
}

/// Reads either game file format, telling them apart by the magic line.
pub fn parse_any_game(text: &str) -> Result<AnyGame, ParseError> {
    let magic = significant_lines(text)
        .next()
        .ok_or(ParseError::UnexpectedEnd {
            expected: "a magic line",
        })?;
    match magic.1.trim() {
        "cpg 1" => Ok(AnyGame::Product(parse_game(text)?)),
        "tug 1" => Ok(AnyGame::Table(parse_table(text)?)),
        other => Err(ParseError::BadMagic {
            line: magic.0,
            expected: "cpg 1` or `tug 1",
            found: other.to_string(),
        }),
    }
}

/// One exact rational: `p` or `p/q` in decimal, optional leading `-`, q > 0.
///
/// The result is reduced, so `6/4` reads as `3/2`.
pub fn parse_rational(token: &str) -> Result<BigRational, ParseError> {
    let bad = || ParseError::BadRational {
        token: token.to_string(),
    };
    match token.split_once('/') {
        None => {
            let p: BigInt = token.parse().map_err(|_| bad())?;
            Ok(BigRational::from_integer(p))
        }
        Some((numer, denom)) => {
            let p: BigInt = numer.parse().map_err(|_| bad())?;
            let q: BigInt = denom.parse().map_err(|_| bad())?;
            if !q.is_positive() {
                return Err(bad());
            }
            Ok(BigRational::new(p, q))
        }
    }
}

/// Reads imputation text against a game: n rationals summing to the grand
/// value.
pub fn parse_imputation(text: &str, game: &CpGame) -> Result<Imputation, ParseError> {
    let mut payoffs = Vec::new();
    for (_, content) in significant_lines(text) {
        for token in content.split_whitespace() {
            payoffs.push(parse_rational(token)?);
        }
    }
    let n = game.player_count();
    if payoffs.len() != n {
        return Err(ParseError::CountMismatch {
            what: "payoffs",
            expected: n,
            got: payoffs.len(),
        });
    }
    let expected = BigInt::from(game.grand_value());
    let sum: BigRational = payoffs.iter().fold(BigRational::zero(), |acc, p| acc + p);
    if sum != BigRational::from_integer(expected.clone()) {
        return Err(ParseError::NotEfficient { sum, expected });
    }
    Ok(Imputation::from_verified(payoffs))
}

/// A comma-separated list of 1-based player indices; the empty string is the
/// empty list.
pub fn parse_index_list(text: &str) -> Result<Vec<usize>, ParseError> {
    if text.trim().is_empty() {
        return Ok(Vec::new());
    }
    text.split(',')
        .map(|raw| {
            let token = raw.trim();
            token.parse().map_err(|_| ParseError::BadIndex {
                token: token.to_string(),
            })
        })
        .collect()
}

/// Mixture text `PERM@COEF;PERM@COEF;…`: permutations as comma-separated
/// indices, coefficients as rationals. Empty terms (say from a trailing `;`)
/// are skipped; index validity and the coefficient sum are checked later,
/// against the game.
pub fn parse_mix(text: &str) -> Result<Vec<(Vec<usize>, BigRational)>, ParseError> {
    let mut terms = Vec::new();
    for segment in text.split(';') {
        let segment = segment.trim();
        if segment.is_empty() {
            continue;
        }
        let (perm, coef) = segment.split_once('@').ok_or_else(|| ParseError::BadMixTerm {
            segment: segment.to_string(),
        })?;
        terms.push((parse_index_list(perm)?, parse_rational(coef)?));
    }
    Ok(terms)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn frac(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn parse_game_happy_path() {
        let game = parse_game("cpg 1\n3\n2 3 5\n").unwrap();
        assert_eq!(game.player_count(), 3);
        assert_eq!(game.grand_value(), 30u32.into());
    }

    #[test]
    fn parse_game_reports_small_weights_with_their_line() {
        assert_eq!(
            parse_game("cpg 1\n2\n1 1\n").unwrap_err(),
            ParseError::InvalidWeight {
                line: 3,
                value: BigInt::one(),
            }
        );
        assert_eq!(
            parse_game("cpg 1\n2\n2\n0\n").unwrap_err(),
            ParseError::InvalidWeight {
                line: 4,
                value: BigInt::zero(),
            }
        );
    }

    #[test]
    fn parse_game_counts_weights() {
        assert_eq!(
            parse_game("cpg 1\n3\n2 3\n").unwrap_err(),
            ParseError::CountMismatch {
                what: "weights",
                expected: 3,
                got: 2,
            }
        );
    }

    #[test]
    fn parse_game_rejects_wrong_magic_and_truncation() {
        assert_eq!(
            parse_game("cpg 2\n1\n2\n").unwrap_err(),
            ParseError::BadMagic {
                line: 1,
                expected: "cpg 1",
                found: "cpg 2".to_string(),
            }
        );
        assert!(matches!(
            parse_game("cpg 1\n").unwrap_err(),
            ParseError::UnexpectedEnd { .. }
        ));
        assert_eq!(
            parse_game("cpg 1\ntwo\n2 2\n").unwrap_err(),
            ParseError::NotAnInteger {
                line: 2,
                token: "two".to_string(),
            }
        );
        assert_eq!(
            parse_game("cpg 1\n0\n").unwrap_err(),
            ParseError::NoPlayers { line: 2 }
        );
    }

    #[test]
    fn parse_game_skips_comments_and_splits_lines() {
        let text = "# a three player game\ncpg 1\n\n3\n2 3\n# interlude\n5\n";
        let game = parse_game(text).unwrap();
        assert_eq!(game.grand_value(), 30u32.into());
    }

    #[test]
    fn game_round_trip_is_canonical() {
        let game = parse_game("cpg 1\n# weights follow\n3\n2\n3\n5\n").unwrap();
        let rendered = render_game(&game);
        assert_eq!(rendered, "cpg 1\n3\n2 3 5\n");
        assert_eq!(parse_game(&rendered).unwrap(), game);
    }

    #[test]
    fn parse_game_keeps_huge_weights_exact() {
        let huge = "1".to_string() + &"0".repeat(40);
        let game = parse_game(&format!("cpg 1\n1\n{huge}\n")).unwrap();
        assert_eq!(game.grand_value().to_string(), huge);
    }

    #[test]
    fn parse_table_happy_path_any_order() {
        let table = parse_table("tug 1\n2\n3 1\n0 0\n2 1\n1 1\n").unwrap();
        assert_eq!(table.player_count(), 2);
        assert_eq!(table.values(), &[rat(0), rat(1), rat(1), rat(1)]);
    }

    #[test]
    fn parse_table_reads_rationals_and_negatives() {
        let table = parse_table("tug 1\n1\n0 -1/2\n1 6/4\n").unwrap();
        assert_eq!(table.values(), &[frac(-1, 2), frac(3, 2)]);
    }

    #[test]
    fn parse_table_rejects_malformed_inputs() {
        assert_eq!(
            parse_table("tug 1\n2\n0 0\n1 1\n2 1\n").unwrap_err(),
            ParseError::CountMismatch {
                what: "table entries",
                expected: 4,
                got: 3,
            }
        );
        assert_eq!(
            parse_table("tug 1\n1\n0 0\n0 1\n").unwrap_err(),
            ParseError::DuplicateMask { line: 4, mask: 0 }
        );
        assert_eq!(
            parse_table("tug 1\n1\n0 0\n2 1\n").unwrap_err(),
            ParseError::MaskOutOfRange {
                line: 4,
                mask: 2,
                n: 1,
            }
        );
        assert_eq!(
            parse_table("tug 1\n1\n0\n1 1\n").unwrap_err(),
            ParseError::BadTableLine { line: 3 }
        );
        assert_eq!(
            parse_table("tug 1\n64\n").unwrap_err(),
            ParseError::TableTooLarge {
                line: 2,
                n: 64,
                limit: MASK_LIMIT,
            }
        );
        assert!(matches!(
            parse_table("cpg 1\n1\n2\n").unwrap_err(),
            ParseError::BadMagic { .. }
        ));
    }

    #[test]
    fn table_round_trip_is_canonical() {
        let table = parse_table("tug 1\n2\n3 1\n0 0\n2 1\n1 1\n").unwrap();
        let rendered = render_table(&table);
        assert_eq!(rendered, "tug 1\n2\n0 0\n1 1\n2 1\n3 1\n");
        assert_eq!(parse_table(&rendered).unwrap(), table);
    }

    #[test]
    fn parse_any_game_distinguishes_by_magic() {
        assert!(matches!(
            parse_any_game("cpg 1\n1\n2\n").unwrap(),
            AnyGame::Product(_)
        ));
        assert!(matches!(
            parse_any_game("tug 1\n1\n0 0\n1 2\n").unwrap(),
            AnyGame::Table(_)
        ));
        assert!(matches!(
            parse_any_game("pgn 1\n").unwrap_err(),
            ParseError::BadMagic { .. }
        ));
    }

    #[test]
    fn parse_rational_accepts_both_shapes() {
        assert_eq!(parse_rational("7").unwrap(), rat(7));
        assert_eq!(parse_rational("-5").unwrap(), rat(-5));
        assert_eq!(parse_rational("3/4").unwrap(), frac(3, 4));
        assert_eq!(parse_rational("-3/4").unwrap(), frac(-3, 4));
        assert_eq!(parse_rational("6/4").unwrap(), frac(3, 2));
    }

    #[test]
    fn parse_rational_rejects_junk() {
        for bad in ["x", "", "3/0", "3/-4", "5/", "/5", "1/2/3", "1.5"] {
            assert_eq!(
                parse_rational(bad).unwrap_err(),
                ParseError::BadRational {
                    token: bad.to_string(),
                },
                "token {bad:?} should be rejected"
            );
        }
    }

    #[test]
    fn parse_imputation_happy_paths() {
        let trio = parse_game("cpg 1\n3\n2 3 5\n").unwrap();
        let imp = parse_imputation("2 4 24", &trio).unwrap();
        assert_eq!(imp.payoffs(), &[rat(2), rat(4), rat(24)]);

        let pair = parse_game("cpg 1\n2\n2 3\n").unwrap();
        let halves = parse_imputation("5/2 7/2", &pair).unwrap();
        assert_eq!(halves.payoffs(), &[frac(5, 2), frac(7, 2)]);

        let signed = parse_imputation("-5 11", &pair).unwrap();
        assert_eq!(signed.payoffs(), &[rat(-5), rat(11)]);
    }

    #[test]
    fn parse_imputation_rejects_inefficiency_and_miscounts() {
        let trio = parse_game("cpg 1\n3\n2 3 5\n").unwrap();
        assert_eq!(
            parse_imputation("1 1 1", &trio).unwrap_err(),
            ParseError::NotEfficient {
                sum: rat(3),
                expected: BigInt::from(30),
            }
        );
        assert_eq!(
            parse_imputation("15 15", &trio).unwrap_err(),
            ParseError::CountMismatch {
                what: "payoffs",
                expected: 3,
                got: 2,
            }
        );
        assert!(matches!(
            parse_imputation("2 4 oops", &trio).unwrap_err(),
            ParseError::BadRational { .. }
        ));
    }

    #[test]
    fn parse_index_list_handles_empty_and_spacing() {
        assert_eq!(parse_index_list("").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_index_list("  ").unwrap(), Vec::<usize>::new());
        assert_eq!(parse_index_list("1,3").unwrap(), vec![1, 3]);
        assert_eq!(parse_index_list("2, 1").unwrap(), vec![2, 1]);
        assert_eq!(
            parse_index_list("1,x").unwrap_err(),
            ParseError::BadIndex {
                token: "x".to_string(),
            }
        );
    }

    #[test]
    fn parse_mix_splits_terms() {
        let terms = parse_mix("1,2,3@1/2;3,2,1@1/2;").unwrap();
        assert_eq!(
            terms,
            vec![
                (vec![1, 2, 3], frac(1, 2)),
                (vec![3, 2, 1], frac(1, 2)),
            ]
        );
        assert_eq!(
            parse_mix("1,2,3").unwrap_err(),
            ParseError::BadMixTerm {
                segment: "1,2,3".to_string(),
            }
        );
    }
}
