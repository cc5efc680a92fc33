//! Complex literals such as `2`, `-0.5i`, `1-2i`, `3e-2+i`.

use num_complex::Complex64;

pub fn parse_complex(s: &str) -> Result<Complex64, String> {
    let t: String = s.chars().filter(|c| !c.is_whitespace()).collect();
    if t.is_empty() {
        return Err("empty complex literal".into());
    }
    let bad = || format!("malformed complex literal {s:?}");
    let Some(body) = t.strip_suffix(['i', 'j']) else {
        let re = t.parse::<f64>().map_err(|_| bad())?;
        return finite(Complex64::new(re, 0.0)).ok_or_else(bad);
    };
    // Split at the last sign that is not a leading sign or an exponent sign.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (body[..k].parse::<f64>().map_err(|_| bad())?, &body[k..]),
        None => (0.0, body),
    };
    let im = match im {
        "" | "+" => 1.0,
        "-" => -1.0,
        other => other.parse::<f64>().map_err(|_| bad())?,
    };
    finite(Complex64::new(re, im)).ok_or_else(bad)
}

fn finite(z: Complex64) -> Option<Complex64> {
    z.is_finite().then_some(z)
}
