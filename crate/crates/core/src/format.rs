//! Textual family format.
//!
//! One member per line. Signed families write both sign blocks:
//! `+{1,3} -{5}` (the minus block may be `-{}` when l = 0); plain set
//! families write only the plus block: `+{1,3}`. Elements are 1-based and
//! ascending. Blank lines and `#` comments are ignored by the parsers.
//! Writer output re-parses to an identical family and re-writes to
//! identical bytes.

use crate::error::{Error, Result};
use crate::family::{SetFamily, SignedFamily};
use crate::mask::{self, Mask};
use crate::params::Params;
use crate::signed::SignedSet;
use std::fmt::Write as _;

fn write_block(out: &mut String, sign: char, m: Mask) {
    out.push(sign);
    out.push('{');
    let mut first = true;
    for e in mask::to_elems(m) {
        if !first {
            out.push(',');
        }
        let _ = write!(out, "{e}");
        first = false;
    }
    out.push('}');
}

pub fn write_signed_family(fam: &SignedFamily) -> String {
    let mut out = String::new();
    for v in fam.members() {
        write_block(&mut out, '+', v.plus());
        out.push(' ');
        write_block(&mut out, '-', v.minus());
        out.push('\n');
    }
    out
}

pub fn write_set_family(fam: &SetFamily) -> String {
    let mut out = String::new();
    for &m in fam.members() {
        write_block(&mut out, '+', m);
        out.push('\n');
    }
    out
}

fn parse_block(s: &str, sign: char, line: usize) -> Result<Mask> {
    let body = s
        .strip_prefix(sign)
        .and_then(|r| r.strip_prefix('{'))
        .and_then(|r| r.strip_suffix('}'))
        .ok_or_else(|| Error::Parse {
            line,
            msg: format!("expected `{sign}{{...}}`, got `{s}`"),
        })?;
    let mut m: Mask = 0;
    if body.is_empty() {
        return Ok(0);
    }
    for tok in body.split(',') {
        let e: u32 = tok.trim().parse().map_err(|_| Error::Parse {
            line,
            msg: format!("bad element `{tok}`"),
        })?;
        if e == 0 || e > mask::MAX_GROUND {
            return Err(Error::Parse { line, msg: format!("element {e} out of range") });
        }
        let bit = mask::singleton(e);
        if m & bit != 0 {
            return Err(Error::Parse { line, msg: format!("duplicate element {e}") });
        }
        m |= bit;
    }
    Ok(m)
}

fn content_lines(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

pub fn parse_signed_family(text: &str, ambient: Params) -> Result<SignedFamily> {
    let mut members = Vec::new();
    for (line, content) in content_lines(text) {
        let (plus_part, minus_part) =
            content.split_once(' ').ok_or_else(|| Error::Parse {
                line,
                msg: "expected two sign blocks".into(),
            })?;
        let plus = parse_block(plus_part.trim(), '+', line)?;
        let minus = parse_block(minus_part.trim(), '-', line)?;
        let member = SignedSet::new(ambient, plus, minus).map_err(|e| Error::Parse {
            line,
            msg: e.to_string(),
        })?;
        members.push(member);
    }
    let n = members.len();
    let fam = SignedFamily::new(ambient, members)?;
    if fam.len() != n {
        return Err(Error::Parse { line: 0, msg: "duplicate members in file".into() });
    }
    Ok(fam)
}

pub fn parse_set_family(text: &str, ambient_n: u32, member_size: u32) -> Result<SetFamily> {
    let mut members = Vec::new();
    for (line, content) in content_lines(text) {
        members.push(parse_block(content, '+', line)?);
    }
    let n = members.len();
    let fam = SetFamily::new(ambient_n, member_size, members)
        .map_err(|e| Error::Parse { line: 0, msg: e.to_string() })?;
    if fam.len() != n {
        return Err(Error::Parse { line: 0, msg: "duplicate members in file".into() });
    }
    Ok(fam)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::star_family;
    use crate::family::all_vectors;

    #[test]
    fn signed_roundtrip_is_bit_exact() {
        let p = Params::new(5, 2, 1).unwrap();
        let fam = star_family(p).unwrap();
        let text = write_signed_family(&fam);
        let back = parse_signed_family(&text, p).unwrap();
        assert_eq!(back, fam);
        assert_eq!(write_signed_family(&back), text);
    }

    #[test]
    fn set_roundtrip_is_bit_exact() {
        let fam = SetFamily::complete(5, 2).unwrap();
        let text = write_set_family(&fam);
        assert!(text.starts_with("+{1,2}\n"));
        let back = parse_set_family(&text, 5, 2).unwrap();
        assert_eq!(back, fam);
        assert_eq!(write_set_family(&back), text);
    }

    #[test]
    fn comments_and_blanks_are_ignored() {
        let p = Params::new(5, 2, 1).unwrap();
        let text = "# header\n\n+{1,3} -{5}\n  \n# tail\n+{2,4} -{1}\n";
        let fam = parse_signed_family(text, p).unwrap();
        assert_eq!(fam.len(), 2);
    }

    #[test]
    fn zero_minus_block() {
        let p = Params::new(4, 2, 0).unwrap();
        let fam = all_vectors(p).unwrap();
        let text = write_signed_family(&fam);
        assert!(text.contains("-{}"));
        assert_eq!(parse_signed_family(&text, p).unwrap(), fam);
    }

    #[test]
    fn malformed_lines_are_rejected() {
        let p = Params::new(5, 2, 1).unwrap();
        for bad in [
            "+{1,3}",             // missing minus block
            "+{1,3} -{3}",        // overlap
            "+{1} -{3}",          // wrong plus size
            "+{1,3} -{5} extra",  // trailing junk
            "+{1,1} -{5}",        // duplicate element
            "+{1,99} -{5}",       // out of range
        ] {
            assert!(parse_signed_family(bad, p).is_err(), "should reject `{bad}`");
        }
        let dup = "+{1,3} -{5}\n+{1,3} -{5}\n";
        assert!(parse_signed_family(dup, p).is_err());
    }
}
