use num_complex::Complex64;
use qhe_cyclic::wavefn::{
    eval, gram_matrix, inner_product_exact, inner_product_mc, GramMethod, GramParams, PlaneConfig, WavefunctionSpec,
};
use serde_json::json;

use crate::args::{MethodArg, SamplingArgs, WfArg, WfCmd};
use crate::report::Report;

fn spec(w: WfArg, n0: usize) -> anyhow::Result<WavefunctionSpec> {
    Ok(match w {
        WfArg::Laughlin(m) => WavefunctionSpec::laughlin(m, n0)?,
        WfArg::R1 { a0, a1, b } => WavefunctionSpec::hierarchy_r1(a0, a1, b, 1, n0)?,
    })
}

/// `x,y;x,y;...` into complex positions.
fn positions(text: &str) -> anyhow::Result<Vec<Complex64>> {
    text.split(';')
        .map(|pair| {
            let (x, y) = pair.split_once(',').ok_or_else(|| anyhow::anyhow!("--z: expected x,y in {pair:?}"))?;
            Ok(Complex64::new(x.trim().parse()?, y.trim().parse()?))
        })
        .collect()
}

fn params(s: &SamplingArgs, normalize: bool) -> GramParams {
    GramParams { samples: s.samples, seed: s.seed, workers: s.workers, quad_order: s.quad_order, normalize }
}

pub fn run(cmd: &WfCmd) -> anyhow::Result<Report> {
    match cmd {
        WfCmd::Eval { wf, z, quad_order } => {
            let z = positions(z)?;
            let spec = spec(*wf, z.len())?;
            let value = eval(&spec, &PlaneConfig(z), *quad_order)?;
            Report::new("wf eval", &json!({ "spec": spec, "value": value, "abs_sq": value.norm_sqr() }))
        }
        WfCmd::Inner { wf, n0, sampling } => {
            let [a, b] = wf[..] else {
                anyhow::bail!("--wf: expected exactly two wavefunctions, got {}", wf.len());
            };
            let (a, b) = (spec(a, *n0)?, spec(b, *n0)?);
            let result = match sampling.method {
                MethodArg::Exact => inner_product_exact(&a, &b)?,
                MethodArg::Mc => {
                    inner_product_mc(&a, &b, sampling.samples, sampling.seed, sampling.workers, sampling.quad_order)?
                }
            };
            Report::new("wf inner", &json!({ "a": a, "b": b, "inner": result }))
        }
        WfCmd::Gram { wf, n0, normalize, sampling } => {
            let specs = wf.iter().map(|w| spec(*w, *n0)).collect::<anyhow::Result<Vec<_>>>()?;
            let method = match sampling.method {
                MethodArg::Exact => GramMethod::Exact,
                MethodArg::Mc => GramMethod::Mc,
            };
            let g = gram_matrix(&specs, method, &params(sampling, *normalize))?;
            let table = g.entries.iter().fold(String::new(), |s, row| {
                let cells: Vec<String> = row.iter().map(|e| format!("{:>24}", format!("{:.6e}{:+.6e}i", e.re + 0.0, e.im + 0.0))).collect();
                s + &cells.join(" ") + "\n"
            });
            let csv = g.to_csv();
            Ok(Report::new("wf gram", &g)?.table(table).csv(csv))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_positions() {
        let z = positions("0.5,-1; 2,3").unwrap();
        assert_eq!(z, vec![Complex64::new(0.5, -1.0), Complex64::new(2.0, 3.0)]);
        assert!(positions("1;2").is_err());
    }

    #[test]
    fn wavefunction_arguments_round_trip() {
        for text in ["laughlin:3", "r1:1,2,-1"] {
            assert_eq!(text.parse::<WfArg>().unwrap().to_string(), text);
        }
        assert!("laughlin".parse::<WfArg>().is_err());
        assert!("r1:1,2".parse::<WfArg>().is_err());
    }
}
