use qhe_cyclic::hierarchy::{
    basis_index, blok_wen_sequence, decompose, eval_positive_cf, family, partition_sum, ContinuedFraction, CfForm, FillingFactor,
    PositiveCf, StandardCf,
};
use serde_json::json;

use crate::args::{CfFormArg, FfCmd};
use crate::report::Report;

fn form(f: CfFormArg) -> CfForm {
    match f {
        CfFormArg::Standard => CfForm::Standard,
        CfFormArg::Positive => CfForm::Positive,
    }
}

fn filling(s: &str) -> anyhow::Result<FillingFactor> {
    s.parse().map_err(|e| anyhow::anyhow!("--nu {s}: {e}"))
}

fn joined<T: ToString>(items: &[T]) -> String {
    items.iter().map(ToString::to_string).collect::<Vec<_>>().join(" ") + "\n"
}

pub fn run(cmd: &FfCmd) -> anyhow::Result<Report> {
    match cmd {
        FfCmd::Eval { cf, form: f } => {
            let cf = match f {
                CfFormArg::Standard => ContinuedFraction::Standard(StandardCf::new(cf.clone())?),
                CfFormArg::Positive => ContinuedFraction::Positive(PositiveCf::new(cf.clone())?),
            };
            let nu = cf.eval()?;
            let table = format!("{nu}\n");
            Ok(Report::new("ff eval", &json!({ "cf": cf, "form": f, "nu": nu }))?.table(table))
        }
        FfCmd::Decompose { nu, form: f } => {
            let nu = filling(nu)?;
            let cf = decompose(&nu, form(*f))?;
            let table = joined(cf.coefficients());
            Ok(Report::new("ff decompose", &json!({ "nu": nu, "form": f, "cf": cf }))?.table(table))
        }
        FfCmd::Family { p } => {
            let members = family(*p)?;
            let sum = partition_sum(*p)?;
            let table = joined(&members);
            let csv = members.iter().enumerate().fold(String::from("i,nu\n"), |s, (i, m)| s + &format!("{},{m}\n", i + 1));
            Ok(Report::new("ff family", &json!({ "p": p, "members": members, "partition_sum": sum }))?.table(table).csv(csv))
        }
        FfCmd::Blokwen { cf } => {
            let cf = PositiveCf::new(cf.clone())?;
            let seq = blok_wen_sequence(&cf)?;
            let weights: Vec<String> = (0..seq.qs.len())
                .map(|a| seq.gaussian_weight(a).map(|w| w.to_string()).unwrap_or_default())
                .collect();
            let result = json!({
                "cf": cf,
                "nu": eval_positive_cf(&cf)?,
                "thetas": seq.thetas,
                "qs": seq.qs,
                "gaussian_weights": weights,
                "recursion_holds": seq.satisfies_recursion(&cf),
            });
            Ok(Report::new("ff blokwen", &result)?)
        }
        FfCmd::Index { nu, family: fam } => {
            let nu = filling(nu)?;
            let (i, p) = basis_index(&nu, *fam)?;
            Ok(Report::new("ff index", &json!({ "nu": nu, "i": i, "p": p }))?.table(format!("{i} {p}\n")))
        }
    }
}
