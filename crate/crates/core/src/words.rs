//! Words in the fundamental group of a theta graph and in free groups.
//!
//! `ThetaWord` holds an element of the fundamental group of the n-arm theta
//! graph based at the wedge vertex, written in the loop letters `g(i,j)` that
//! traverse arm `i` inward and arm `j` outward. Triviality, abelianization,
//! and normal forms all go through a faithful encoding into a free group:
//! `g(i,j)` maps to `x_i x_j^{-1}`, which sends the free basis
//! `{g(i,i+1)}` to an independent set, so a word is trivial exactly when its
//! encoded image reduces to the empty word.

use crate::error::{Error, Result};
use std::fmt;

/// One letter `x_gen` or `x_gen^{-1}` of a free-group word. `gen` is 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct FreeLetter {
    pub gen: u16,
    pub inverse: bool,
}

impl FreeLetter {
    pub fn inverted(self) -> Self {
        FreeLetter {
            gen: self.gen,
            inverse: !self.inverse,
        }
    }

    fn cancels(self, other: FreeLetter) -> bool {
        self.gen == other.gen && self.inverse != other.inverse
    }
}

/// A reduced word in the free group of the given rank.
///
/// The letter sequence never contains an adjacent cancelling pair; the empty
/// sequence is the identity.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FreeWord {
    rank: u16,
    letters: Vec<FreeLetter>,
}

impl FreeWord {
    pub fn identity(rank: u16) -> Self {
        FreeWord {
            rank,
            letters: Vec::new(),
        }
    }

    /// Builds a word from raw letters, reducing them. Indices outside
    /// `1..=rank` are rejected.
    pub fn new(rank: u16, letters: impl IntoIterator<Item = FreeLetter>) -> Result<Self> {
        let mut word = FreeWord::identity(rank);
        for l in letters {
            if l.gen == 0 || l.gen > rank {
                return Err(Error::InvalidWord(format!(
                    "generator index {} outside 1..={rank}",
                    l.gen
                )));
            }
            word.push(l);
        }
        Ok(word)
    }

    /// Appends one letter, cancelling against the current tail.
    fn push(&mut self, letter: FreeLetter) {
        match self.letters.last() {
            Some(&last) if last.cancels(letter) => {
                self.letters.pop();
            }
            _ => self.letters.push(letter),
        }
    }

    pub fn rank(&self) -> u16 {
        self.rank
    }

    pub fn letters(&self) -> &[FreeLetter] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Group multiplication: concatenate and reduce.
    pub fn mul(&self, rhs: &FreeWord) -> Result<FreeWord> {
        if self.rank != rhs.rank {
            return Err(Error::InvalidWord(format!(
                "rank mismatch {} vs {}",
                self.rank, rhs.rank
            )));
        }
        let mut out = self.clone();
        for &l in &rhs.letters {
            out.push(l);
        }
        Ok(out)
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord {
            rank: self.rank,
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    /// Exponent sum of each generator, indexed 0..rank.
    pub fn exponent_sums(&self) -> Vec<i64> {
        let mut sums = vec![0i64; self.rank as usize];
        for l in &self.letters {
            sums[(l.gen - 1) as usize] += if l.inverse { -1 } else { 1 };
        }
        sums
    }
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            write!(f, "x{}", l.gen)?;
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// Reduces an arbitrary letter sequence in the free group of rank `rank`.
///
/// Idempotent; the result represents the same group element.
pub fn reduce(rank: u16, letters: impl IntoIterator<Item = FreeLetter>) -> Result<FreeWord> {
    FreeWord::new(rank, letters)
}

/// One letter `g(i,j)` or `g(i,j)^{-1}` of a theta-graph word: the loop that
/// enters the star along arm `i` and leaves along arm `j` (1-based).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct ThetaLetter {
    pub enter: u16,
    pub exit: u16,
    pub inverse: bool,
}

impl ThetaLetter {
    pub fn gen(enter: u16, exit: u16) -> Self {
        ThetaLetter {
            enter,
            exit,
            inverse: false,
        }
    }

    pub fn inverted(self) -> Self {
        ThetaLetter {
            inverse: !self.inverse,
            ..self
        }
    }
}

/// An element of the fundamental group of the theta graph with `arms` arms,
/// as a sequence of `g(i,j)` letters. Not stored reduced; use [`ThetaWord::encode`]
/// or [`ThetaWord::basis_decomposition`] for normal forms.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ThetaWord {
    arms: u16,
    letters: Vec<ThetaLetter>,
}

impl ThetaWord {
    pub fn identity(arms: u16) -> Result<Self> {
        if arms < 2 {
            return Err(Error::InvalidWord(format!(
                "theta graph needs at least 2 arms, got {arms}"
            )));
        }
        Ok(ThetaWord {
            arms,
            letters: Vec::new(),
        })
    }

    pub fn new(arms: u16, letters: impl IntoIterator<Item = ThetaLetter>) -> Result<Self> {
        let mut word = ThetaWord::identity(arms)?;
        for l in letters {
            word.push(l)?;
        }
        Ok(word)
    }

    pub fn push(&mut self, letter: ThetaLetter) -> Result<()> {
        if letter.enter == 0 || letter.enter > self.arms || letter.exit == 0 || letter.exit > self.arms
        {
            return Err(Error::InvalidWord(format!(
                "arm index of g({},{}) outside 1..={}",
                letter.enter, letter.exit, self.arms
            )));
        }
        if letter.enter == letter.exit {
            return Err(Error::InvalidWord(format!(
                "g({},{}) is degenerate; equal arm indices are not letters",
                letter.enter, letter.exit
            )));
        }
        self.letters.push(letter);
        Ok(())
    }

    pub fn arms(&self) -> u16 {
        self.arms
    }

    pub fn letters(&self) -> &[ThetaLetter] {
        &self.letters
    }

    pub fn mul(&self, rhs: &ThetaWord) -> Result<ThetaWord> {
        if self.arms != rhs.arms {
            return Err(Error::InvalidWord(format!(
                "arm count mismatch {} vs {}",
                self.arms, rhs.arms
            )));
        }
        Ok(ThetaWord {
            arms: self.arms,
            letters: self
                .letters
                .iter()
                .chain(rhs.letters.iter())
                .copied()
                .collect(),
        })
    }

    pub fn inverse(&self) -> ThetaWord {
        ThetaWord {
            arms: self.arms,
            letters: self.letters.iter().rev().map(|l| l.inverted()).collect(),
        }
    }

    /// `c * self * c^{-1}`.
    pub fn conjugate_by(&self, c: &ThetaWord) -> Result<ThetaWord> {
        c.mul(self)?.mul(&c.inverse())
    }

    /// Faithful image in the free group of rank `arms`: `g(i,j)` maps to
    /// `x_i x_j^{-1}`, reduced. The image is empty exactly when the word is
    /// trivial.
    pub fn encode(&self) -> FreeWord {
        let mut out = FreeWord::identity(self.arms);
        for l in &self.letters {
            let (first, second) = if l.inverse {
                (l.exit, l.enter)
            } else {
                (l.enter, l.exit)
            };
            out.push(FreeLetter {
                gen: first,
                inverse: false,
            });
            out.push(FreeLetter {
                gen: second,
                inverse: true,
            });
        }
        out
    }

    /// True when the word represents the identity. Triviality is invariant
    /// under conjugation, so this also answers "is every conjugate trivial".
    pub fn is_trivial(&self) -> bool {
        self.encode().is_empty()
    }

    /// Exponent-sum vector of the encoded word in `x_1..x_arms`; the image of
    /// the word in first homology. Always sums to zero.
    pub fn abelianize(&self) -> Vec<i64> {
        self.encode().exponent_sums()
    }

    /// Rewrites the word in the free basis `b_i = g(i,i+1)`, `1 <= i < arms`,
    /// returning the reduced basis word (rank `arms - 1`). Uses
    /// `g(i,k) = b_i b_{i+1} ... b_{k-1}` for `i < k` and inverses for `i > k`.
    pub fn basis_decomposition(&self) -> FreeWord {
        let mut out = FreeWord::identity(self.arms - 1);
        for l in &self.letters {
            let (from, to) = if l.inverse {
                (l.exit, l.enter)
            } else {
                (l.enter, l.exit)
            };
            if from < to {
                for g in from..to {
                    out.push(FreeLetter {
                        gen: g,
                        inverse: false,
                    });
                }
            } else {
                for g in (to..from).rev() {
                    out.push(FreeLetter {
                        gen: g,
                        inverse: true,
                    });
                }
            }
        }
        out
    }

    /// Parses the whitespace-separated text form, e.g. `"g12 g23^-1"`.
    /// Multi-digit arm indices use a comma: `"g10,12"`. The identity prints
    /// as `"1"` and parses back from it.
    pub fn parse(arms: u16, text: &str) -> Result<ThetaWord> {
        let mut word = ThetaWord::identity(arms)?;
        if text.trim() == "1" {
            return Ok(word);
        }
        for token in text.split_whitespace() {
            word.push(parse_letter(token)?)?;
        }
        Ok(word)
    }
}

fn parse_letter(token: &str) -> Result<ThetaLetter> {
    let bad = |why: &str| Error::Parse(format!("bad word letter `{token}`: {why}"));
    let rest = token
        .strip_prefix('g')
        .ok_or_else(|| bad("expected leading `g`"))?;
    let (body, inverse) = match rest.strip_suffix("^-1") {
        Some(b) => (b, true),
        None => (rest, false),
    };
    let (enter, exit) = if let Some((a, b)) = body.split_once(',') {
        (
            a.parse::<u16>().map_err(|_| bad("bad arm index"))?,
            b.parse::<u16>().map_err(|_| bad("bad arm index"))?,
        )
    } else {
        let digits: Vec<char> = body.chars().collect();
        if digits.len() != 2 || !digits.iter().all(|c| c.is_ascii_digit()) {
            return Err(bad("expected two digits or comma-separated indices"));
        }
        (
            digits[0].to_digit(10).unwrap() as u16,
            digits[1].to_digit(10).unwrap() as u16,
        )
    };
    Ok(ThetaLetter {
        enter,
        exit,
        inverse,
    })
}

impl fmt::Display for ThetaWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.letters.is_empty() {
            return write!(f, "1");
        }
        for (i, l) in self.letters.iter().enumerate() {
            if i > 0 {
                write!(f, " ")?;
            }
            if l.enter < 10 && l.exit < 10 {
                write!(f, "g{}{}", l.enter, l.exit)?;
            } else {
                write!(f, "g{},{}", l.enter, l.exit)?;
            }
            if l.inverse {
                write!(f, "^-1")?;
            }
        }
        Ok(())
    }
}

/// An element of the product of theta-graph groups indexed by a set of
/// essential vertices, one component per vertex in a fixed order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ProductWord {
    components: Vec<(String, ThetaWord)>,
}

impl ProductWord {
    pub fn new(components: Vec<(String, ThetaWord)>) -> Self {
        ProductWord { components }
    }

    pub fn components(&self) -> &[(String, ThetaWord)] {
        &self.components
    }

    pub fn component(&self, vertex: &str) -> Option<&ThetaWord> {
        self.components
            .iter()
            .find(|(v, _)| v == vertex)
            .map(|(_, w)| w)
    }

    /// Trivial in the product group: every component trivial.
    pub fn is_trivial(&self) -> bool {
        self.components.iter().all(|(_, w)| w.is_trivial())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(i: u16, j: u16) -> ThetaLetter {
        ThetaLetter::gen(i, j)
    }

    /// Independent reduction oracle: repeatedly delete the first adjacent
    /// cancelling pair until none remains.
    fn naive_reduce(letters: &[FreeLetter]) -> Vec<FreeLetter> {
        let mut v = letters.to_vec();
        loop {
            let mut cancelled = None;
            for i in 0..v.len().saturating_sub(1) {
                if v[i].cancels(v[i + 1]) {
                    cancelled = Some(i);
                    break;
                }
            }
            match cancelled {
                Some(i) => {
                    v.drain(i..i + 2);
                }
                None => return v,
            }
        }
    }

    #[test]
    fn encode_single_generator() {
        let w = ThetaWord::new(3, [g(1, 2)]).unwrap();
        let e = w.encode();
        assert_eq!(
            e.letters(),
            &[
                FreeLetter {
                    gen: 1,
                    inverse: false
                },
                FreeLetter {
                    gen: 2,
                    inverse: true
                }
            ]
        );
        assert_eq!(e.to_string(), "x1 x2^-1");
    }

    #[test]
    fn encode_cycle_is_trivial() {
        // g12 g23 g31 annihilates to the identity.
        let w = ThetaWord::new(3, [g(1, 2), g(2, 3), g(3, 1)]).unwrap();
        assert!(w.encode().is_empty());
        assert!(w.is_trivial());
    }

    #[test]
    fn detection_word_is_reduced_length_12() {
        let half = [g(2, 3), g(1, 2), g(3, 1)];
        let w = ThetaWord::new(3, half.iter().copied().chain(half.iter().copied())).unwrap();
        let e = w.encode();
        assert_eq!(e.len(), 12);
        assert!(!w.is_trivial());
        // Against the naive oracle on the unreduced letter stream.
        let raw: Vec<FreeLetter> = half
            .iter()
            .chain(half.iter())
            .flat_map(|l| {
                [
                    FreeLetter {
                        gen: l.enter,
                        inverse: false,
                    },
                    FreeLetter {
                        gen: l.exit,
                        inverse: true,
                    },
                ]
            })
            .collect();
        assert_eq!(naive_reduce(&raw), e.letters());
    }

    #[test]
    fn reduce_examples() {
        let x1 = FreeLetter {
            gen: 1,
            inverse: false,
        };
        let w = reduce(2, [x1, x1.inverted()]).unwrap();
        assert!(w.is_empty());

        let x2 = FreeLetter {
            gen: 2,
            inverse: false,
        };
        let w = reduce(2, [x1, x2, x2.inverted(), x1]).unwrap();
        assert_eq!(w.letters(), &[x1, x1]);
    }

    #[test]
    fn reduce_idempotent_matches_oracle() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for _ in 0..500 {
            let rank = rng.gen_range(1..=5u16);
            let letters: Vec<FreeLetter> = (0..rng.gen_range(0..40))
                .map(|_| FreeLetter {
                    gen: rng.gen_range(1..=rank),
                    inverse: rng.gen_bool(0.5),
                })
                .collect();
            let reduced = reduce(rank, letters.clone()).unwrap();
            assert_eq!(reduced.letters(), naive_reduce(&letters).as_slice());
            let again = reduce(rank, reduced.letters().iter().copied()).unwrap();
            assert_eq!(again, reduced);
        }
    }

    #[test]
    fn relation_rearranged_is_trivial() {
        // g13^-1 g12 g23 = 1, the arm relation rearranged.
        let w = ThetaWord::new(3, [g(1, 3).inverted(), g(1, 2), g(2, 3)]).unwrap();
        assert!(w.is_trivial());
    }

    #[test]
    fn commutator_is_nontrivial_with_zero_abelianization() {
        let a = ThetaWord::new(3, [g(2, 3)]).unwrap();
        let b = ThetaWord::new(3, [g(1, 2)]).unwrap();
        let comm = a
            .mul(&b)
            .unwrap()
            .mul(&a.inverse())
            .unwrap()
            .mul(&b.inverse())
            .unwrap();
        assert!(!comm.is_trivial());
        assert_eq!(comm.abelianize(), vec![0, 0, 0]);
    }

    #[test]
    fn abelianize_examples() {
        let w = ThetaWord::new(3, [g(1, 2)]).unwrap();
        assert_eq!(w.abelianize(), vec![1, -1, 0]);
        let w = ThetaWord::new(3, [g(1, 2), g(1, 3)]).unwrap();
        assert_eq!(w.abelianize(), vec![2, -1, -1]);
    }

    #[test]
    fn basis_decomposition_examples() {
        // g13 = b1 b2.
        let w = ThetaWord::new(3, [g(1, 3)]).unwrap();
        let d = w.basis_decomposition();
        assert_eq!(
            d.letters(),
            &[
                FreeLetter {
                    gen: 1,
                    inverse: false
                },
                FreeLetter {
                    gen: 2,
                    inverse: false
                }
            ]
        );

        // g21 = b1^-1.
        let w = ThetaWord::new(3, [g(2, 1)]).unwrap();
        assert_eq!(
            w.basis_decomposition().letters(),
            &[FreeLetter {
                gen: 1,
                inverse: true
            }]
        );

        // Detection word = ([b2, b1])^2, an 8-letter basis word.
        let half = [g(2, 3), g(1, 2), g(3, 1)];
        let w = ThetaWord::new(3, half.iter().copied().chain(half.iter().copied())).unwrap();
        let d = w.basis_decomposition();
        assert_eq!(d.len(), 8);
        let b1 = FreeLetter {
            gen: 1,
            inverse: false,
        };
        let b2 = FreeLetter {
            gen: 2,
            inverse: false,
        };
        assert_eq!(
            d.letters(),
            &[
                b2,
                b1,
                b2.inverted(),
                b1.inverted(),
                b2,
                b1,
                b2.inverted(),
                b1.inverted()
            ]
        );
    }

    #[test]
    fn basis_decomposition_round_trips_through_encode() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(11);
        for _ in 0..300 {
            let arms = rng.gen_range(2..=6u16);
            let w = random_word(&mut rng, arms, 24);
            let basis = w.basis_decomposition();
            // Substitute b_i -> x_i x_{i+1}^{-1} and compare with encode(w).
            let mut expanded = FreeWord::identity(arms);
            for l in basis.letters() {
                let theta = if l.inverse {
                    ThetaLetter::gen(l.gen, l.gen + 1).inverted()
                } else {
                    ThetaLetter::gen(l.gen, l.gen + 1)
                };
                let single = ThetaWord::new(arms, [theta]).unwrap();
                expanded = expanded.mul(&single.encode()).unwrap();
            }
            assert_eq!(expanded, w.encode());
        }
    }

    fn random_word(rng: &mut impl rand::Rng, arms: u16, max_len: usize) -> ThetaWord {
        let len = rng.gen_range(0..=max_len);
        let letters = (0..len).map(|_| {
            let i = rng.gen_range(1..=arms);
            let mut j = rng.gen_range(1..=arms);
            while j == i {
                j = rng.gen_range(1..=arms);
            }
            ThetaLetter {
                enter: i,
                exit: j,
                inverse: rng.gen_bool(0.5),
            }
        });
        ThetaWord::new(arms, letters).unwrap()
    }

    #[test]
    fn parse_and_display_round_trip() {
        let w = ThetaWord::parse(3, "g12  g23^-1\n g31").unwrap();
        assert_eq!(w.to_string(), "g12 g23^-1 g31");
        let big = ThetaWord::parse(12, "g10,12 g1,11^-1").unwrap();
        assert_eq!(big.to_string(), "g10,12 g1,11^-1");
        let identity = ThetaWord::parse(3, "1").unwrap();
        assert!(identity.letters().is_empty());
        assert_eq!(identity.to_string(), "1");
        assert!(ThetaWord::parse(3, "h12").is_err());
        assert!(ThetaWord::parse(3, "g14").is_err());
        assert!(ThetaWord::parse(3, "g11").is_err());
    }

    #[test]
    fn rejects_bad_arm_counts() {
        assert!(ThetaWord::identity(1).is_err());
        assert!(ThetaWord::new(3, [g(0, 2)]).is_err());
        assert!(ThetaWord::new(3, [g(1, 4)]).is_err());
    }
}
