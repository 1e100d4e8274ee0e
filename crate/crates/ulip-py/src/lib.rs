//! Python bindings for the `ulip` prover and interpolant synthesizer.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use ulip::calculus::LogicId;
use ulip::interpolation::{self, Mode};
use ulip::prover::{self, Proof};
use ulip::sequent::Sequent;
use ulip::syntax::{Atom, Formula, Language, Polarity};

fn err(e: impl ToString) -> PyErr {
    PyValueError::new_err(e.to_string())
}

fn logic(name: &str) -> PyResult<LogicId> {
    name.parse().map_err(err)
}

fn mode(pol: &str) -> PyResult<Mode> {
    match pol {
        "pos" => Ok(Mode::Lyndon(Polarity::Pos)),
        "neg" => Ok(Mode::Lyndon(Polarity::Neg)),
        "plain" => Ok(Mode::Plain),
        _ => Err(err(format!("polarity must be pos, neg or plain, not `{pol}`"))),
    }
}

fn atom(name: &str) -> PyResult<Atom> {
    Atom::new(name).map_err(err)
}

/// Parse in the given language, or try modal then conditional.
fn parse_formula(text: &str, lang: Option<Language>) -> PyResult<Formula> {
    match lang {
        Some(l) => Formula::parse(text, l).map_err(err),
        None => Formula::parse(text, Language::Modal)
            .or_else(|_| Formula::parse(text, Language::Conditional))
            .map_err(err),
    }
}

fn to_json<'py>(py: Python<'py>, v: &impl serde::Serialize) -> PyResult<Bound<'py, PyAny>> {
    let text = serde_json::to_string(v).map_err(err)?;
    py.import("json")?.call_method1("loads", (text,))
}

#[pyclass(name = "Formula", module = "ulip_py", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PyFormula(Formula);

#[pymethods]
impl PyFormula {
    #[new]
    #[pyo3(signature = (text, logic=None))]
    fn new(text: &str, logic: Option<&str>) -> PyResult<PyFormula> {
        let lang = logic.map(self::logic).transpose()?.map(LogicId::language);
        parse_formula(text, lang).map(PyFormula)
    }

    #[getter]
    fn weight(&self) -> u32 {
        self.0.weight()
    }

    /// Atom names occurring in the formula.
    fn vars(&self) -> Vec<String> {
        self.0.vars().iter().map(Atom::to_string).collect()
    }

    /// `(positive, negative)` atom names.
    fn signed_vars(&self) -> (Vec<String>, Vec<String>) {
        let sv = self.0.signed_vars();
        (sv.pos.iter().map(Atom::to_string).collect(), sv.neg.iter().map(Atom::to_string).collect())
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Formula({:?})", self.0.to_string())
    }
}

#[pyclass(name = "Sequent", module = "ulip_py", frozen, eq, hash, from_py_object)]
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PySequent(Sequent);

#[pymethods]
impl PySequent {
    #[new]
    #[pyo3(signature = (text, logic=None))]
    fn new(text: &str, logic: Option<&str>) -> PyResult<PySequent> {
        let parse = |l| Sequent::parse(text, l);
        let s = match logic {
            Some(name) => parse(self::logic(name)?.language()),
            None => parse(Language::Modal).or_else(|_| parse(Language::Conditional)),
        };
        s.map(PySequent).map_err(err)
    }

    #[getter]
    fn antecedent(&self) -> Vec<PyFormula> {
        self.0.ant().iter().cloned().map(PyFormula).collect()
    }

    #[getter]
    fn succedent(&self) -> Vec<PyFormula> {
        self.0.suc().iter().cloned().map(PyFormula).collect()
    }

    #[getter]
    fn weight(&self) -> u32 {
        self.0.weight()
    }

    fn __str__(&self) -> String {
        self.0.to_string()
    }

    fn __repr__(&self) -> String {
        format!("Sequent({:?})", self.0.to_string())
    }
}

#[pyclass(name = "Proof", module = "ulip_py", frozen, from_py_object)]
#[derive(Clone)]
pub struct PyProof(Proof);

#[pymethods]
impl PyProof {
    #[getter]
    fn rule(&self) -> &'static str {
        self.0.rule.name()
    }

    #[getter]
    fn conclusion(&self) -> PySequent {
        PySequent(self.0.conclusion.clone())
    }

    #[getter]
    fn premises(&self) -> Vec<PyProof> {
        self.0.premises.iter().cloned().map(PyProof).collect()
    }

    #[getter]
    fn height(&self) -> usize {
        self.0.height()
    }

    #[getter]
    fn size(&self) -> usize {
        self.0.size()
    }

    fn has_cut(&self) -> bool {
        self.0.has_cut()
    }

    fn pretty(&self) -> String {
        self.0.pretty()
    }

    /// `{rule, sequent, premises}` as a JSON string.
    fn to_json(&self) -> String {
        self.0.to_json().to_string()
    }

    #[staticmethod]
    fn from_json(text: &str, logic: &str) -> PyResult<PyProof> {
        let v: serde_json::Value = serde_json::from_str(text).map_err(err)?;
        Proof::from_json(&v, self::logic(logic)?.language()).map(PyProof).map_err(err)
    }

    /// Is every node a rule instance of `logic` (Cut only with `allow_cut`)?
    #[pyo3(signature = (logic, allow_cut=false))]
    fn check(&self, logic: &str, allow_cut: bool) -> PyResult<bool> {
        let l = self::logic(logic)?;
        Ok(if allow_cut { prover::check_proof_with_cut(l, &self.0) } else { prover::check_proof(l, &self.0) })
    }

    fn __str__(&self) -> String {
        self.0.pretty()
    }
}

/// Sequent text or a `Sequent`.
#[derive(FromPyObject)]
enum SequentArg {
    Seq(PySequent),
    Text(String),
}

impl SequentArg {
    fn get(self, l: LogicId) -> PyResult<Sequent> {
        match self {
            SequentArg::Seq(s) => Ok(s.0),
            SequentArg::Text(t) => Sequent::parse(&t, l.language()).map_err(err),
        }
    }
}

/// Formula text or a `Formula`.
#[derive(FromPyObject)]
enum FormulaArg {
    Formula(PyFormula),
    Text(String),
}

impl FormulaArg {
    fn get(self, l: LogicId) -> PyResult<Formula> {
        match self {
            FormulaArg::Formula(f) => Ok(f.0),
            FormulaArg::Text(t) => Formula::parse(&t, l.language()).map_err(err),
        }
    }
}

/// Names of all supported logics.
#[pyfunction]
fn logics() -> Vec<&'static str> {
    LogicId::ALL.iter().map(|l| l.name()).collect()
}

#[pyfunction]
fn provable(logic: &str, sequent: SequentArg) -> PyResult<bool> {
    let l = self::logic(logic)?;
    Ok(prover::provable(l, &sequent.get(l)?))
}

/// A cut-free proof, or `None` when unprovable.
#[pyfunction]
fn prove(logic: &str, sequent: SequentArg) -> PyResult<Option<PyProof>> {
    let l = self::logic(logic)?;
    Ok(prover::prove(l, &sequent.get(l)?).map(PyProof))
}

/// `∀°p` of a sequent (given as text containing `=>`, or a `Sequent`) or of a formula.
#[pyfunction]
#[pyo3(signature = (logic, atom, target, pol="pos"))]
fn forall(logic: &str, atom: &str, target: &Bound<'_, PyAny>, pol: &str) -> PyResult<PyFormula> {
    let l = self::logic(logic)?;
    let s = if let Ok(s) = target.extract::<PySequent>() {
        s.0
    } else if let Ok(f) = target.extract::<PyFormula>() {
        Sequent::right(f.0)
    } else {
        let text: String = target.extract()?;
        if text.contains("=>") {
            Sequent::parse(&text, l.language()).map_err(err)?
        } else {
            Sequent::right(Formula::parse(&text, l.language()).map_err(err)?)
        }
    };
    interpolation::global().forall_sequent(l, mode(pol)?, &self::atom(atom)?, &s).map(PyFormula).map_err(err)
}

/// `∃°p φ`.
#[pyfunction]
#[pyo3(signature = (logic, atom, formula, pol="pos"))]
fn exists(logic: &str, atom: &str, formula: FormulaArg, pol: &str) -> PyResult<PyFormula> {
    let l = self::logic(logic)?;
    interpolation::global()
        .exists_formula(l, mode(pol)?, &self::atom(atom)?, &formula.get(l)?)
        .map(PyFormula)
        .map_err(err)
}

#[pyfunction]
fn lyndon_interpolant(logic: &str, phi: FormulaArg, psi: FormulaArg) -> PyResult<PyFormula> {
    let l = self::logic(logic)?;
    interpolation::global().lyndon_interpolant(l, &phi.get(l)?, &psi.get(l)?).map(PyFormula).map_err(err)
}

/// Check (var), (i) and bounded (ii); returns the report as a dict.
#[pyfunction]
#[pyo3(signature = (logic, atom, sequent, candidate, pol="pos", bound=3, alphabet=None))]
#[allow(clippy::too_many_arguments)]
fn verify<'py>(
    py: Python<'py>,
    logic: &str,
    atom: &str,
    sequent: SequentArg,
    candidate: FormulaArg,
    pol: &str,
    bound: u32,
    alphabet: Option<Vec<String>>,
) -> PyResult<Bound<'py, PyAny>> {
    let l = self::logic(logic)?;
    let p = self::atom(atom)?;
    let s = sequent.get(l)?;
    let alphabet: Vec<Atom> = match alphabet {
        Some(names) => names.iter().map(|n| self::atom(n)).collect::<PyResult<_>>()?,
        None => {
            let mut v: Vec<Atom> = s.signed_vars().all().into_iter().collect();
            if !v.contains(&p) {
                v.push(p.clone());
                v.sort();
            }
            v
        }
    };
    if alphabet.len() > 6 {
        return Err(err("verification alphabet is limited to six atoms"));
    }
    let c = candidate.get(l)?;
    let report = ulip::verify::verify_interpolant(prover::global(), l, mode(pol)?, &p, &s, &c, bound, &alphabet);
    to_json(py, &report)
}

/// First Craig interpolant over `atoms` up to weight `bound`, or `None`.
#[pyfunction]
#[pyo3(signature = (logic, phi, psi, atoms, bound=3))]
fn craig(logic: &str, phi: FormulaArg, psi: FormulaArg, atoms: Vec<String>, bound: u32) -> PyResult<Option<PyFormula>> {
    let l = self::logic(logic)?;
    let alphabet: Vec<Atom> = atoms.iter().map(|n| self::atom(n)).collect::<PyResult<_>>()?;
    if alphabet.len() > 6 {
        return Err(err("search alphabet is limited to six atoms"));
    }
    ulip::craig::search_craig_interpolant(prover::global(), l, &phi.get(l)?, &psi.get(l)?, &alphabet, bound)
        .map(|o| o.map(PyFormula))
        .map_err(err)
}

#[pyfunction]
fn translate_t(formula: FormulaArg) -> PyResult<PyFormula> {
    Ok(PyFormula(ulip::translate::translate_t(&formula.get(LogicId::K)?)))
}

#[pyfunction]
fn translate_s(formula: FormulaArg) -> PyResult<PyFormula> {
    Ok(PyFormula(ulip::translate::translate_s(&formula.get(LogicId::CK)?)))
}

#[pyfunction]
fn eliminate_cut(logic: &str, proof: PyProof) -> PyResult<PyProof> {
    let l = self::logic(logic)?;
    ulip::cutelim::eliminate_cut(prover::global(), l, &proof.0).map(PyProof).map_err(err)
}

#[pymodule]
fn ulip_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyFormula>()?;
    m.add_class::<PySequent>()?;
    m.add_class::<PyProof>()?;
    m.add_function(wrap_pyfunction!(logics, m)?)?;
    m.add_function(wrap_pyfunction!(provable, m)?)?;
    m.add_function(wrap_pyfunction!(prove, m)?)?;
    m.add_function(wrap_pyfunction!(forall, m)?)?;
    m.add_function(wrap_pyfunction!(exists, m)?)?;
    m.add_function(wrap_pyfunction!(lyndon_interpolant, m)?)?;
    m.add_function(wrap_pyfunction!(verify, m)?)?;
    m.add_function(wrap_pyfunction!(craig, m)?)?;
    m.add_function(wrap_pyfunction!(translate_t, m)?)?;
    m.add_function(wrap_pyfunction!(translate_s, m)?)?;
    m.add_function(wrap_pyfunction!(eliminate_cut, m)?)?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn argument_parsing() {
        assert!(logic("ckcemid").is_ok());
        assert!(logic("S4").is_err());
        assert_eq!(mode("plain").unwrap(), Mode::Plain);
        assert!(mode("both").is_err());
        assert!(parse_formula("p > q", None).is_ok());
        assert!(parse_formula("[]p", None).is_ok());
    }
}
