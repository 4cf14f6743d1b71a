use super::{ParseError, ParseErrorKind};

#[derive(Debug, Clone, PartialEq)]
pub(crate) enum Tok {
    Number { value: f64, integer: bool },
    Ident(String),
    Plus,
    Minus,
    Star,
    Slash,
    Caret,
    LParen,
    RParen,
    End,
}

/// A token with its character span `[start, end)`.
#[derive(Debug, Clone, PartialEq)]
pub(crate) struct Token {
    pub tok: Tok,
    pub start: usize,
    pub end: usize,
}

pub(crate) fn tokenize(text: &str) -> Result<Vec<Token>, ParseError> {
    let chars: Vec<char> = text.chars().collect();
    let mut out = Vec::new();
    let mut i = 0;
    while i < chars.len() {
        let ch = chars[i];
        if ch.is_whitespace() {
            i += 1;
            continue;
        }
        let start = i;
        let single = match ch {
            '+' => Some(Tok::Plus),
            '-' => Some(Tok::Minus),
            '*' => Some(Tok::Star),
            '/' => Some(Tok::Slash),
            '^' => Some(Tok::Caret),
            '(' => Some(Tok::LParen),
            ')' => Some(Tok::RParen),
            _ => None,
        };
        if let Some(tok) = single {
            i += 1;
            out.push(Token { tok, start, end: i });
        } else if ch.is_ascii_digit() || ch == '.' {
            let (tok, end) = number(&chars, start)?;
            i = end;
            out.push(Token { tok, start, end });
        } else if ch.is_alphabetic() {
            while i < chars.len() && chars[i].is_alphabetic() {
                i += 1;
            }
            let ident: String = chars[start..i].iter().collect();
            out.push(Token {
                tok: Tok::Ident(ident),
                start,
                end: i,
            });
        } else {
            return Err(ParseError::new(
                ParseErrorKind::Lexical,
                start,
                format!("unexpected character '{ch}'"),
            ));
        }
    }
    out.push(Token {
        tok: Tok::End,
        start: chars.len(),
        end: chars.len(),
    });
    Ok(out)
}

fn digits(chars: &[char], mut i: usize) -> usize {
    while i < chars.len() && chars[i].is_ascii_digit() {
        i += 1;
    }
    i
}

fn number(chars: &[char], start: usize) -> Result<(Tok, usize), ParseError> {
    let mut i = digits(chars, start);
    let int_end = i;
    let mut integer = true;
    if i < chars.len() && chars[i] == '.' {
        integer = false;
        i = digits(chars, i + 1);
    }
    let mantissa_digits = chars[start..i].iter().filter(|c| c.is_ascii_digit()).count();
    if mantissa_digits == 0 {
        return Err(ParseError::new(
            ParseErrorKind::Lexical,
            start,
            "malformed number",
        ));
    }
    // An exponent marker only counts when digits follow; `1 eV` and `1eV`
    // stay a number followed by a unit.
    if i < chars.len() && (chars[i] == 'e' || chars[i] == 'E') {
        let mut j = i + 1;
        if j < chars.len() && (chars[j] == '+' || chars[j] == '-') {
            j += 1;
        }
        if j < chars.len() && chars[j].is_ascii_digit() {
            integer = false;
            i = digits(chars, j);
        }
    }
    debug_assert!(int_end <= i);
    let text: String = chars[start..i].iter().collect();
    let value: f64 = text.parse().map_err(|_| {
        ParseError::new(ParseErrorKind::Lexical, start, format!("malformed number '{text}'"))
    })?;
    if !value.is_finite() {
        return Err(ParseError::new(
            ParseErrorKind::Lexical,
            start,
            format!("number out of range '{text}'"),
        ));
    }
    Ok((Tok::Number { value, integer }, i))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn toks(s: &str) -> Vec<Tok> {
        tokenize(s).unwrap().into_iter().map(|t| t.tok).collect()
    }

    #[test]
    fn numbers() {
        assert_eq!(
            toks("1e23 kB"),
            vec![
                Tok::Number { value: 1e23, integer: false },
                Tok::Ident("kB".into()),
                Tok::End
            ]
        );
        assert_eq!(
            toks("1eV"),
            vec![
                Tok::Number { value: 1.0, integer: true },
                Tok::Ident("eV".into()),
                Tok::End
            ]
        );
        assert_eq!(
            toks(".5"),
            vec![Tok::Number { value: 0.5, integer: false }, Tok::End]
        );
        assert_eq!(
            toks("2.5E-3"),
            vec![Tok::Number { value: 2.5e-3, integer: false }, Tok::End]
        );
    }

    #[test]
    fn spans_are_char_offsets() {
        let t = tokenize("10 \u{b5}J").unwrap();
        assert_eq!((t[1].start, t[1].end), (3, 5));
        assert_eq!(t[2].start, 5);
    }

    #[test]
    fn lexical_errors() {
        let e = tokenize("1 # 2").unwrap_err();
        assert_eq!((e.kind, e.offset), (ParseErrorKind::Lexical, 2));
        let e = tokenize("1e999").unwrap_err();
        assert_eq!(e.offset, 0);
        let e = tokenize("3 + .").unwrap_err();
        assert_eq!(e.offset, 4);
    }
}
