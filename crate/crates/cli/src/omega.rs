//! Textual constructors for driving functions.
//!
//! Syntax:
//!   `const:<re>,<im>`                 constant with |c| ≤ 1
//!   `negmob:<a>`                      ω(z) = −(a+z)/(1+az), |a| < 1
//!   `blaschke:<theta>;<re,im>;...`    phase and zeros (zeros optional)
//!   `taylor:<c0>,<c1>,...`            real Taylor coefficients

use num_complex::Complex64;
use umlam::SchurFunction;

pub fn parse_omega(spec: &str) -> Result<SchurFunction, String> {
    let (kind, rest) = spec
        .split_once(':')
        .ok_or_else(|| format!("omega spec `{spec}` is missing a `kind:` prefix"))?;
    match kind {
        "const" => {
            let (re, im) = rest
                .split_once(',')
                .ok_or_else(|| format!("const needs `<re>,<im>`, got `{rest}`"))?;
            let c = Complex64::new(parse_num("re", re)?, parse_num("im", im)?);
            SchurFunction::constant(c).map_err(|e| e.to_string())
        }
        "negmob" => {
            let a = parse_num("a", rest)?;
            SchurFunction::negated_mobius(a).map_err(|e| e.to_string())
        }
        "blaschke" => {
            let mut parts = rest.split(';');
            let theta = parse_num("theta", parts.next().unwrap_or(""))?;
            let mut zeros = Vec::new();
            for pair in parts {
                let (re, im) = pair
                    .split_once(',')
                    .ok_or_else(|| format!("Blaschke zero needs `<re>,<im>`, got `{pair}`"))?;
                zeros.push(Complex64::new(parse_num("re", re)?, parse_num("im", im)?));
            }
            SchurFunction::blaschke(theta, zeros).map_err(|e| e.to_string())
        }
        "taylor" => {
            let coeffs = rest
                .split(',')
                .map(|tok| parse_num("coefficient", tok).map(|x| Complex64::new(x, 0.0)))
                .collect::<Result<Vec<_>, _>>()?;
            SchurFunction::taylor_schur(coeffs).map_err(|e| e.to_string())
        }
        other => Err(format!(
            "unknown omega kind `{other}` (expected const, negmob, blaschke or taylor)"
        )),
    }
}

fn parse_num(name: &str, tok: &str) -> Result<f64, String> {
    tok.trim()
        .parse::<f64>()
        .map_err(|_| format!("could not parse {name} from `{tok}`"))
}
