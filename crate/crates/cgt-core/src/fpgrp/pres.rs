//! Presentations and the word syntax.
//!
//! Words are whitespace-separated expressions over declared generator
//! names: `a`, `a^-1`, `(a b)^3`, `comm(a, b)`.  A relator may be written
//! with a right-hand side, `w = z`, which normalizes to `w·z⁻¹`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;

use super::FpError;
use crate::gf::GenWord;

/// A finite presentation: generator names, relators, and optional subgroup
/// generator words (the default subgroup for coset enumeration).
#[derive(Clone, Debug)]
pub struct Presentation {
    names: Vec<String>,
    relators: Vec<GenWord>,
    subgroup_words: Vec<GenWord>,
}

impl Presentation {
    /// Builds a presentation, validating that names are distinct nonempty
    /// identifiers (and not the reserved `comm`) and that every relator and
    /// subgroup word references declared generators only.
    pub fn new(
        names: Vec<String>,
        relators: Vec<GenWord>,
        subgroup_words: Vec<GenWord>,
    ) -> Result<Self, FpError> {
        for (i, n) in names.iter().enumerate() {
            let ok = !n.is_empty()
                && n != "comm"
                && n.chars().next().is_some_and(|c| c.is_ascii_alphabetic() || c == '_')
                && n.chars().all(|c| c.is_ascii_alphanumeric() || c == '_' || c == '\'');
            if !ok || names[..i].contains(n) {
                return Err(FpError::BadGeneratorName { name: n.clone() });
            }
        }
        for w in relators.iter().chain(subgroup_words.iter()) {
            if let Some(max) = w.max_generator() {
                if max >= names.len() {
                    return Err(FpError::GeneratorIndex { index: max, count: names.len() });
                }
            }
        }
        Ok(Presentation { names, relators, subgroup_words })
    }

    /// The generator names, in index order.
    pub fn names(&self) -> &[String] {
        &self.names
    }

    /// Number of generators.
    pub fn gen_count(&self) -> usize {
        self.names.len()
    }

    /// The relators.
    pub fn relators(&self) -> &[GenWord] {
        &self.relators
    }

    /// The subgroup generator words (empty for the trivial subgroup).
    pub fn subgroup_words(&self) -> &[GenWord] {
        &self.subgroup_words
    }

    /// Parses a word in this presentation's generators.
    pub fn parse_word(&self, text: &str) -> Result<GenWord, FpError> {
        parse_word(&self.names, text)
    }

    /// Renders a word using this presentation's generator names.
    pub fn render_word(&self, w: &GenWord) -> String {
        w.render(&self.names)
    }
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Name(String),
    Int(i64),
    LParen,
    RParen,
    Comma,
    Caret,
    Eq,
}

fn lex(text: &str) -> Result<Vec<Tok>, FpError> {
    let mut toks = Vec::new();
    let mut chars = text.chars().peekable();
    while let Some(&c) = chars.peek() {
        match c {
            c if c.is_whitespace() => {
                chars.next();
            }
            '(' => {
                chars.next();
                toks.push(Tok::LParen);
            }
            ')' => {
                chars.next();
                toks.push(Tok::RParen);
            }
            ',' => {
                chars.next();
                toks.push(Tok::Comma);
            }
            '^' => {
                chars.next();
                toks.push(Tok::Caret);
            }
            '=' => {
                chars.next();
                toks.push(Tok::Eq);
            }
            '-' | '0'..='9' => {
                chars.next();
                let negative = c == '-';
                let mut value: i64 = if negative { 0 } else { (c as u8 - b'0') as i64 };
                let mut digits = !negative;
                while let Some(&d) = chars.peek() {
                    if let Some(v) = d.to_digit(10) {
                        chars.next();
                        value = value
                            .checked_mul(10)
                            .and_then(|x| x.checked_add(v as i64))
                            .ok_or_else(|| FpError::Parse("integer overflow".to_string()))?;
                        digits = true;
                    } else {
                        break;
                    }
                }
                if !digits {
                    return Err(FpError::Parse("`-` must begin an integer".to_string()));
                }
                toks.push(Tok::Int(if negative { -value } else { value }));
            }
            c if c.is_ascii_alphabetic() || c == '_' => {
                let mut name = String::new();
                while let Some(&d) = chars.peek() {
                    if d.is_ascii_alphanumeric() || d == '_' || d == '\'' {
                        name.push(d);
                        chars.next();
                    } else {
                        break;
                    }
                }
                toks.push(Tok::Name(name));
            }
            other => {
                return Err(FpError::Parse(alloc::format!("unexpected character `{other}`")));
            }
        }
    }
    Ok(toks)
}

struct Parser<'a> {
    names: &'a [String],
    toks: Vec<Tok>,
    pos: usize,
}

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos)
    }

    fn next(&mut self) -> Option<Tok> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, t: &Tok, what: &str) -> Result<(), FpError> {
        match self.next() {
            Some(ref got) if got == t => Ok(()),
            got => Err(FpError::Parse(alloc::format!("expected {what}, found {got:?}"))),
        }
    }

    /// word := atom*  (stops at `)`, `,`, `=`, or end of input)
    fn word(&mut self) -> Result<GenWord, FpError> {
        let mut w = GenWord::identity();
        loop {
            match self.peek() {
                None | Some(Tok::RParen) | Some(Tok::Comma) | Some(Tok::Eq) => break,
                _ => {
                    let atom = self.atom()?;
                    w = w.concat(&atom);
                }
            }
        }
        Ok(w)
    }

    /// atom := primary [ ^ int ]
    fn atom(&mut self) -> Result<GenWord, FpError> {
        let base = self.primary()?;
        if self.peek() == Some(&Tok::Caret) {
            self.next();
            match self.next() {
                Some(Tok::Int(e)) => Ok(base.power(e)),
                got => Err(FpError::Parse(alloc::format!("expected exponent, found {got:?}"))),
            }
        } else {
            Ok(base)
        }
    }

    /// primary := name | ( word ) | comm( word , word )
    fn primary(&mut self) -> Result<GenWord, FpError> {
        match self.next() {
            Some(Tok::Name(name)) if name == "comm" => {
                self.expect(&Tok::LParen, "`(` after comm")?;
                let left = self.word()?;
                self.expect(&Tok::Comma, "`,` between commutator arguments")?;
                let right = self.word()?;
                self.expect(&Tok::RParen, "`)` closing comm")?;
                Ok(left.commutator(&right))
            }
            Some(Tok::Name(name)) => match self.names.iter().position(|n| *n == name) {
                Some(i) => Ok(GenWord::generator(i, 1)),
                None => Err(FpError::UnknownGenerator { name }),
            },
            Some(Tok::LParen) => {
                let inner = self.word()?;
                self.expect(&Tok::RParen, "`)`")?;
                Ok(inner)
            }
            got => Err(FpError::Parse(alloc::format!("expected a word, found {got:?}"))),
        }
    }
}

/// Parses a word over the given generator names.
pub fn parse_word(names: &[String], text: &str) -> Result<GenWord, FpError> {
    let mut p = Parser { names, toks: lex(text)?, pos: 0 };
    let w = p.word()?;
    match p.peek() {
        None => Ok(w),
        Some(t) => Err(FpError::Parse(alloc::format!("unexpected trailing {t:?}"))),
    }
}

/// Parses a relator, accepting the `lhs = rhs` form and normalizing it to
/// `lhs·rhs⁻¹`.
pub fn parse_relator(names: &[String], text: &str) -> Result<GenWord, FpError> {
    let mut p = Parser { names, toks: lex(text)?, pos: 0 };
    let lhs = p.word()?;
    match p.next() {
        None => Ok(lhs),
        Some(Tok::Eq) => {
            let rhs = p.word()?;
            match p.peek() {
                None => Ok(lhs.concat(&rhs.inverse())),
                Some(t) => Err(FpError::Parse(alloc::format!("unexpected trailing {t:?}"))),
            }
        }
        Some(t) => Err(FpError::Parse(alloc::format!("unexpected trailing {t:?}"))),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn names(list: &[&str]) -> Vec<String> {
        list.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn parses_basic_forms() {
        let ns = names(&["a", "b", "z"]);
        assert_eq!(parse_word(&ns, "a").unwrap(), GenWord::generator(0, 1));
        assert_eq!(parse_word(&ns, "a^-1").unwrap(), GenWord::generator(0, 1).inverse());
        let ab3 = parse_word(&ns, "(a b)^3").unwrap();
        let ab = GenWord::generator(0, 1).concat(&GenWord::generator(1, 1));
        assert_eq!(ab3, ab.power(3));
        assert_eq!(
            parse_word(&ns, "comm(a, b)").unwrap(),
            GenWord::generator(0, 1).commutator(&GenWord::generator(1, 1))
        );
    }

    #[test]
    fn nested_and_mixed_words() {
        let ns = names(&["a", "b", "z"]);
        let w = parse_word(&ns, "comm(a b, z^2)^-1 (a z)^2 b").unwrap();
        let ab = GenWord::generator(0, 1).concat(&GenWord::generator(1, 1));
        let z2 = GenWord::generator(2, 1).power(2);
        let az = GenWord::generator(0, 1).concat(&GenWord::generator(2, 1));
        let expect =
            ab.commutator(&z2).inverse().concat(&az.power(2)).concat(&GenWord::generator(1, 1));
        assert_eq!(w, expect);
    }

    #[test]
    fn relator_right_hand_side_normalizes() {
        let ns = names(&["b", "c", "z"]);
        let rel = parse_relator(&ns, "(b c)^3 = z").unwrap();
        let bc = GenWord::generator(0, 1).concat(&GenWord::generator(1, 1));
        assert_eq!(rel, bc.power(3).concat(&GenWord::generator(2, 1).inverse()));
        // Plain relator, no right-hand side.
        assert_eq!(parse_relator(&ns, "z^2").unwrap(), GenWord::generator(2, 1).power(2));
    }

    #[test]
    fn errors_are_specific() {
        let ns = names(&["a", "b"]);
        assert_eq!(
            parse_word(&ns, "q"),
            Err(FpError::UnknownGenerator { name: "q".to_string() })
        );
        assert!(matches!(parse_word(&ns, "a^"), Err(FpError::Parse(_))));
        assert!(matches!(parse_word(&ns, "(a b"), Err(FpError::Parse(_))));
        assert!(matches!(parse_word(&ns, "a ) b"), Err(FpError::Parse(_))));
        assert!(matches!(parse_word(&ns, "comm(a)"), Err(FpError::Parse(_))));
        assert!(matches!(parse_word(&ns, "a = b"), Err(FpError::Parse(_))));
    }

    #[test]
    fn presentation_validation() {
        let ok = Presentation::new(
            names(&["a", "b"]),
            alloc::vec![GenWord::generator(0, 1).power(2)],
            alloc::vec![],
        );
        assert!(ok.is_ok());
        assert!(matches!(
            Presentation::new(names(&["a", "a"]), alloc::vec![], alloc::vec![]),
            Err(FpError::BadGeneratorName { .. })
        ));
        assert!(matches!(
            Presentation::new(names(&["comm"]), alloc::vec![], alloc::vec![]),
            Err(FpError::BadGeneratorName { .. })
        ));
        assert!(matches!(
            Presentation::new(names(&["a"]), alloc::vec![GenWord::generator(1, 1)], alloc::vec![]),
            Err(FpError::GeneratorIndex { index: 1, count: 1 })
        ));
    }

    #[test]
    fn exponent_zero_and_empty_word() {
        let ns = names(&["a"]);
        assert!(parse_word(&ns, "a^0").unwrap().is_identity());
        assert!(parse_word(&ns, "").unwrap().is_identity());
        assert!(parse_word(&ns, "(a a^-1)^5").unwrap().is_identity());
    }
}
