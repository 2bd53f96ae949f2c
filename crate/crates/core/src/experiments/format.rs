use crate::optimizer::Solution;

/// Shortest decimal string that parses back to exactly `v`.
pub fn fmt_num(v: f64) -> String {
    let plain = format!("{v}");
    let sci = format!("{v:e}");
    if sci.len() < plain.len() {
        sci
    } else {
        plain
    }
}

pub fn fmt_opt(v: Option<f64>) -> String {
    v.map(fmt_num).unwrap_or_default()
}

pub const METRIC_COLUMNS: &str = "status,x,rho,avg_snr,avg_snr_db,avg_eh";

/// `status,x,rho,avg_snr,avg_snr_db,avg_eh` cells; metrics are empty when
/// the solution has no operating point.
pub fn metric_cells(sol: &Solution) -> String {
    match sol.point {
        None => format!("{},,,,,", sol.status),
        Some(p) => format!(
            "{},{},{},{},{},{}",
            sol.status,
            fmt_num(p.x),
            fmt_num(p.rho),
            fmt_num(p.avg_snr),
            fmt_num(crate::model::to_db(p.avg_snr)),
            fmt_num(p.avg_eh),
        ),
    }
}
