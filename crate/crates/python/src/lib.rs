use burnside_core::bisets::{factorize, transitive_biset, SubgroupOfProduct};
use burnside_core::lattice::all_subgroups;
use burnside_core::{lab, units, BurnsideElem, Error, Guards, Method};
use pyo3::create_exception;
use pyo3::exceptions::{PyException, PyValueError};
use pyo3::prelude::*;

create_exception!(burnside, GuardExceeded, PyException);
create_exception!(burnside, BurnsideError, PyException);

fn to_py(e: Error) -> PyErr {
    match e {
        Error::Parse(_)
        | Error::Unsupported(_)
        | Error::Dimension { .. }
        | Error::NotUnit { .. } => PyValueError::new_err(e.to_string()),
        Error::Guard(_) => GuardExceeded::new_err(e.to_string()),
        _ => BurnsideError::new_err(e.to_string()),
    }
}

fn method(name: &str) -> PyResult<Method> {
    Method::ALL
        .into_iter()
        .find(|m| m.name() == name)
        .ok_or_else(|| PyValueError::new_err(format!("unknown method `{name}`")))
}

#[pyclass(name = "UnitGroup", frozen, get_all, skip_from_py_object)]
#[derive(Clone, Debug)]
pub struct UnitGroup {
    pub method: String,
    pub rank: usize,
    /// Basis of the image of the units in the space of forms, as 0/1 strings.
    pub form_basis: Vec<String>,
    pub units: Option<Vec<Vec<i64>>>,
}

#[pymethods]
impl UnitGroup {
    fn __repr__(&self) -> String {
        format!("UnitGroup(method={:?}, rank={})", self.method, self.rank)
    }
}

#[pyclass(name = "KernelReport", frozen, get_all, skip_from_py_object)]
#[derive(Clone, Debug)]
pub struct KernelReport {
    pub group: String,
    pub dim_f2b: usize,
    pub dim_l: usize,
    pub rank_units: usize,
    pub generators_used: Vec<String>,
    pub exactness_ok: bool,
}

#[pyclass(name = "BurnsideRing", frozen)]
pub struct Ring {
    inner: burnside_core::BurnsideRing,
    guards: Guards,
}

impl Ring {
    fn elem(&self, coeffs: Vec<i64>) -> PyResult<BurnsideElem> {
        if coeffs.len() != self.inner.dim() {
            return Err(to_py(Error::Dimension {
                expected: self.inner.dim(),
                found: coeffs.len(),
            }));
        }
        Ok(BurnsideElem { coeffs })
    }
}

#[pymethods]
impl Ring {
    #[new]
    #[pyo3(signature = (spec, max_elements = 10_000, oracle_bits = 24))]
    fn new(spec: &str, max_elements: usize, oracle_bits: u32) -> PyResult<Self> {
        let guards = Guards {
            max_elements,
            oracle_bits,
            ..Guards::default()
        };
        let inner = burnside_core::BurnsideRing::from_preset(spec, &guards).map_err(to_py)?;
        Ok(Self { inner, guards })
    }

    #[getter]
    fn order(&self) -> usize {
        self.inner.group().order()
    }

    #[getter]
    fn dim(&self) -> usize {
        self.inner.dim()
    }

    #[getter]
    fn label(&self) -> String {
        self.inner.label().name_with_order(self.order())
    }

    #[getter]
    fn class_names(&self) -> Vec<String> {
        self.inner.class_names().to_vec()
    }

    /// Rows `G/H`, columns `K`: the number of points of `G/H` fixed by `K`.
    fn marks(&self) -> Vec<Vec<i64>> {
        self.inner.marks().rows().to_vec()
    }

    fn marks_of(&self, x: Vec<i64>) -> PyResult<Vec<i64>> {
        Ok(self.inner.marks_of(&self.elem(x)?))
    }

    #[allow(clippy::wrong_self_convention)]
    fn from_marks(&self, ghost: Vec<i64>) -> PyResult<Vec<i64>> {
        Ok(self.inner.from_marks(&ghost).map_err(to_py)?.coeffs)
    }

    fn mul(&self, x: Vec<i64>, y: Vec<i64>) -> PyResult<Vec<i64>> {
        Ok(self
            .inner
            .mul(&self.elem(x)?, &self.elem(y)?)
            .map_err(to_py)?
            .coeffs)
    }

    /// Coefficients of the primitive idempotent as `(numerator, denominator)`.
    fn idempotent(&self, class_index: usize) -> PyResult<Vec<(i64, i64)>> {
        if class_index >= self.inner.dim() {
            return Err(PyValueError::new_err("class index out of range"));
        }
        Ok(self
            .inner
            .idempotent(class_index)
            .coeffs
            .iter()
            .map(|r| (*r.numer(), *r.denom()))
            .collect())
    }

    fn epsilon(&self) -> PyResult<Vec<i64>> {
        Ok(self.inner.epsilon().map_err(to_py)?.coeffs)
    }

    fn f1(&self, x: Vec<i64>) -> PyResult<Vec<i64>> {
        Ok(self.inner.f1_apply(&self.elem(x)?).map_err(to_py)?.coeffs)
    }

    #[pyo3(signature = (method = "oracle"))]
    fn units(&self, method: &str) -> PyResult<UnitGroup> {
        let d = units::compute(&self.inner, self::method(method)?, &self.guards).map_err(to_py)?;
        Ok(UnitGroup {
            method: d.method.name().to_string(),
            rank: d.rank,
            form_basis: d
                .form_basis
                .iter()
                .map(|f| {
                    f.values
                        .to_bools()
                        .iter()
                        .map(|&b| if b { '1' } else { '0' })
                        .collect()
                })
                .collect(),
            units: d.units.map(|us| us.into_iter().map(|u| u.coeffs).collect()),
        })
    }

    /// `(method, rank)` for every method.
    #[pyo3(signature = (skip_oracle = false))]
    fn unit_ranks(&self, skip_oracle: bool) -> PyResult<Vec<(String, usize)>> {
        Method::ALL
            .into_iter()
            .filter(|&m| !(skip_oracle && m == Method::Oracle))
            .map(|m| {
                let d = units::compute(&self.inner, m, &self.guards).map_err(to_py)?;
                Ok((m.name().to_string(), d.rank))
            })
            .collect()
    }

    fn faithful_units(&self) -> PyResult<Vec<Vec<i64>>> {
        Ok(units::faithful_units(&self.inner, &self.guards)
            .map_err(to_py)?
            .into_iter()
            .map(|u| u.coeffs)
            .collect())
    }

    fn kernel(&self) -> PyResult<KernelReport> {
        let (_, r) = lab::kernel_l(&self.inner, &self.guards, true).map_err(to_py)?;
        Ok(KernelReport {
            group: r.group,
            dim_f2b: r.dim_f2b,
            dim_l: r.dim_l,
            rank_units: r.rank_units,
            generators_used: r.generators_used,
            exactness_ok: r.exactness_ok,
        })
    }

    #[pyo3(signature = (skip_oracle = false))]
    fn verify(&self, skip_oracle: bool) -> PyResult<bool> {
        Ok(lab::verify(&self.inner, &self.guards, skip_oracle)
            .map_err(to_py)?
            .passed())
    }

    fn __repr__(&self) -> String {
        format!(
            "BurnsideRing({}, order={}, classes={})",
            self.label(),
            self.order(),
            self.dim()
        )
    }
}

/// Factorizes every transitive biset `(H × G)/X`; returns the number of
/// subgroups `X` and whether every factorization matched.
#[pyfunction]
fn factorize_all(left: &str, right: &str) -> PyResult<(usize, bool)> {
    let guards = Guards::default();
    let h = burnside_core::BurnsideRing::from_preset(left, &guards).map_err(to_py)?;
    let g = burnside_core::BurnsideRing::from_preset(right, &guards).map_err(to_py)?;
    let p = h.group().direct_product(g.group());
    let table = all_subgroups(&p, &guards).map_err(to_py)?;
    let mut ok = true;
    for x in table.subgroups() {
        let x = SubgroupOfProduct::new(h.group(), g.group(), x.clone()).map_err(to_py)?;
        let f = factorize(&h, &g, &x, &guards).map_err(to_py)?;
        ok &= f.product().map_err(to_py)?.entries == transitive_biset(&h, &g, &x).entries;
    }
    Ok((table.len(), ok))
}

#[pymodule]
fn burnside(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<Ring>()?;
    m.add_class::<UnitGroup>()?;
    m.add_class::<KernelReport>()?;
    m.add_function(wrap_pyfunction!(factorize_all, m)?)?;
    m.add("GuardExceeded", m.py().get_type::<GuardExceeded>())?;
    m.add("BurnsideError", m.py().get_type::<BurnsideError>())?;
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ring_methods_without_interpreter() {
        let r = Ring::new("C4", 10_000, 24).unwrap();
        assert_eq!(r.dim(), 3);
        assert_eq!(r.class_names(), ["C1#1", "C2#1", "C4#1"]);
        assert_eq!(r.units("sections").unwrap().rank, 2);
        assert_eq!(r.units("oracle").unwrap().units.unwrap().len(), 4);
        assert_eq!(r.mul(vec![0, 1, 0], vec![0, 1, 0]).unwrap(), vec![0, 2, 0]);
        assert!(r.kernel().unwrap().exactness_ok);
        assert_eq!(factorize_all("C2", "C2").unwrap(), (5, true));
    }
}
