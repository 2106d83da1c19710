use std::path::Path;
use std::sync::Arc;

use skewpbw::freemod::VectorPoly;
use skewpbw::parse::{parse_expression, parse_presentation, parse_vector};
use skewpbw::{corpus, AlgebraPresentation, ModuleOrder, MonomialOrder, Polynomial};

use crate::error::CliError;

/// The algebra and orders a command runs against.
pub struct Session {
    pub algebra_name: String,
    pub algebra: Arc<AlgebraPresentation>,
    pub order: MonomialOrder,
    module_order_arg: Option<String>,
    consistent: Option<bool>,
}

fn load_algebra(arg: &str) -> Result<Arc<AlgebraPresentation>, CliError> {
    let text = if Path::new(arg).is_file() {
        std::fs::read_to_string(arg).map_err(|e| CliError::Usage(format!("cannot read {arg}: {e}")))?
    } else if let Some(text) = corpus::source(arg) {
        text.to_string()
    } else {
        return Err(CliError::Usage(format!("no presentation file or bundled algebra named `{arg}`")));
    };
    parse_presentation(&text).map_err(|e| CliError::Parse { message: format!("{arg}: {e}"), line: None, column: None })
}

impl Session {
    pub fn open(algebra: &str, order: &str, module_order: Option<&str>) -> Result<Self, CliError> {
        let alg = load_algebra(algebra)?;
        let order = MonomialOrder::parse(order, alg.var_names()).map_err(|e| CliError::Usage(e.to_string()))?;
        Ok(Session {
            algebra_name: algebra.to_string(),
            algebra: alg,
            order,
            module_order_arg: module_order.map(str::to_string),
            consistent: None,
        })
    }

    pub fn is_consistent(&mut self) -> bool {
        let alg = &self.algebra;
        *self.consistent.get_or_insert_with(|| alg.is_consistent())
    }

    /// Refuses Gröbner machinery on a presentation that fails the
    /// overlap check.
    pub fn require_consistent(&mut self) -> Result<(), CliError> {
        if self.is_consistent() {
            Ok(())
        } else {
            let n = self.algebra.consistency_check().len();
            Err(CliError::Inconsistent(format!(
                "{}: presentation fails {n} overlap check(s); run `check` for details",
                self.algebra_name
            )))
        }
    }

    pub fn module_order(&self, rank: usize) -> Result<ModuleOrder, CliError> {
        match &self.module_order_arg {
            None => Ok(ModuleOrder::top(self.order.clone(), rank)),
            Some(arg) => ModuleOrder::parse(arg, self.algebra.var_names(), rank).map_err(|e| CliError::Usage(e.to_string())),
        }
    }

    pub fn poly(&self, text: &str) -> Result<Polynomial, CliError> {
        self.poly_in(text, &self.algebra)
    }

    pub fn poly_in(&self, text: &str, algebra: &Arc<AlgebraPresentation>) -> Result<Polynomial, CliError> {
        parse_expression(text, algebra).map_err(|e| CliError::from_parse(text, e))
    }

    pub fn polys(&self, texts: &[String]) -> Result<Vec<Polynomial>, CliError> {
        texts.iter().map(|t| self.poly(t)).collect()
    }

    pub fn vector(&self, text: &str) -> Result<VectorPoly, CliError> {
        let comps = parse_vector(text, &self.algebra).map_err(|e| CliError::from_parse(text, e))?;
        VectorPoly::new(&self.algebra, comps).map_err(|e| CliError::Usage(e.to_string()))
    }

    pub fn show(&self, f: &Polynomial) -> String {
        f.format_with(&self.order)
    }
}
