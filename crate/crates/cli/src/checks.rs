//! Output shapes and the `series verify` table.

use serde::Serialize;

use ascent_core::counting::CountTable;
use ascent_core::series::asym::{Asymptotics, GrowthFit};
use ascent_core::series::closed::{closed_form_g_1y, closed_form_g_x1, closed_form_gp_x1};
use ascent_core::series::feq::{at_one, functional_equation_expand};
use ascent_core::series::gf::{gf_counts, recurrence_check};
use ascent_core::series::{int, PolySeries};
use ascent_core::verify::{check_parametrizations, check_residuals, CheckResult};
use ascent_core::PathFamily;

/// Parametrizations are compared at most this far; beyond it the check is slow
/// and adds nothing.
const PARAM_ORDER_CAP: usize = 14;

#[derive(Serialize)]
pub struct TableRow {
    pub i: usize,
    pub j: usize,
    pub count: String,
}

pub fn table_rows<C: std::fmt::Display>(t: &CountTable<C>) -> Vec<TableRow> {
    t.counts.iter().map(|(&(i, j), c)| TableRow { i, j, count: c.to_string() }).collect()
}

#[derive(Serialize)]
pub struct AsymReport {
    pub family: PathFamily,
    pub asymptotics: Asymptotics<f64>,
    pub fit: GrowthFit,
}

fn result(name: &'static str, r: Result<String, String>) -> CheckResult {
    match r {
        Ok(detail) => CheckResult { name, passed: true, detail },
        Err(detail) => CheckResult { name, passed: false, detail },
    }
}

fn marginal<C>(s: &PolySeries<C>, var: usize) -> PolySeries<C>
where
    C: ascent_core::series::Field + std::ops::AddAssign,
{
    s.map(|p| p.subst(var, &int(1)))
}

fn compare(name: &str, a: Result<bool, impl ToString>, order: usize) -> Result<String, String> {
    match a {
        Ok(true) => Ok(format!("agree mod t^{}", order + 1)),
        Ok(false) => Err(format!("{name} differs mod t^{}", order + 1)),
        Err(e) => Err(e.to_string()),
    }
}

/// Series identities up to `t^order`.
pub fn series_checks(order: usize) -> Vec<CheckResult> {
    let plain = PathFamily::plain();
    let counts = (|| {
        let g = gf_counts(order).map_err(|e| e.to_string())?;
        let it = functional_equation_expand(&plain, order).map_err(|e| e.to_string())?;
        let ones = at_one(&it);
        let same = g.iter().zip(&ones[1..]).all(|(a, b)| b.is_integer() && b.to_integer().to_biguint().as_ref() == Some(a));
        if !same {
            return Err("Z-equation counts differ from the functional equation".to_string());
        }
        if order >= 3 && !recurrence_check(&g) {
            return Err("holonomic recurrence fails".to_string());
        }
        Ok(format!("g(1..={order}) agree, g({order}) = {}", g[order - 1]))
    })();

    let final_descents = (|| {
        let it = functional_equation_expand(&plain, order).map_err(|e| e.to_string())?;
        compare("G(x,1)", closed_form_g_x1(order).map(|c| c == marginal(&it, 1)), order)?;
        compare("G(1,y)", closed_form_g_1y(order).map(|c| c == marginal(&it, 0)), order)
    })();

    let first_ascent = (|| {
        let it = functional_equation_expand(&PathFamily::mirrored(1), order).map_err(|e| e.to_string())?;
        compare("G'(x,1)", closed_form_gp_x1(order).map(|c| c == marginal(&it, 1)), order)
    })();

    vec![
        result("counts", counts),
        result("closed_final_descents", final_descents),
        result("closed_first_ascent", first_ascent),
        result("catalytic_residuals", check_residuals(order, order)),
        result("parametrizations", check_parametrizations(order.min(PARAM_ORDER_CAP))),
    ]
}
