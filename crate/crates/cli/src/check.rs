use pseudohyp::oracle::CheckReport;

use crate::format::shortest;

pub const CSV_HEADER: &str = "name,r,computed,expected,abs_err,tolerance,pass";

pub fn to_csv(reports: &[CheckReport]) -> String {
    let mut out = String::from(CSV_HEADER);
    out.push('\n');
    for rep in reports {
        let fields = [
            rep.name.clone(),
            shortest(rep.r),
            shortest(rep.computed),
            shortest(rep.expected),
            shortest(rep.abs_err),
            shortest(rep.tolerance),
            rep.pass.to_string(),
        ];
        out.push_str(&fields.join(","));
        out.push('\n');
    }
    out
}

pub fn to_json(reports: &[CheckReport]) -> String {
    let mut out = serde_json::to_string_pretty(reports).expect("reports serialize");
    out.push('\n');
    out
}
