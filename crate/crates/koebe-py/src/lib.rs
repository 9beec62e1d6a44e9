//! Python bindings: family coefficients, univalence certificates, radius
//! bounds and boundary minima as plain Python values (floats carry the
//! enclosure midpoints; decimal strings carry 17 significant digits).

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;
use pyo3::types::{PyDict, PyList};

use koebe::families::{Family, FamilySpec};
use koebe::{CertifiedReal, Sign};

fn err<T>(e: koebe::Error) -> PyResult<T> {
    Err(PyValueError::new_err(e.to_string()))
}

fn parse_family(family: &str, j: Option<u32>) -> PyResult<Family> {
    match family {
        "fejer" => Ok(Family::Fejer),
        "alexander" => Ok(Family::Alexander),
        "suffridge" => Ok(Family::Suffridge { j: j.unwrap_or(1) }),
        "egervary-szasz" => Ok(Family::EgervarySzasz),
        "pnew" => Ok(Family::PNew),
        other => Err(PyValueError::new_err(format!(
            "unknown family {other:?}; expected fejer | alexander | suffridge | egervary-szasz | pnew"
        ))),
    }
}

fn scalar_dict<'py>(py: Python<'py>, v: &CertifiedReal) -> PyResult<Bound<'py, PyDict>> {
    let d = PyDict::new(py);
    d.set_item("mid", v.to_f64())?;
    d.set_item("decimal", v.to_decimal(17))?;
    d.set_item("radius", v.radius().to_f64())?;
    Ok(d)
}

/// Coefficient vector of a family member.
#[pyfunction]
#[pyo3(signature = (family, n, j=None, precision=128))]
fn coefficients<'py>(
    py: Python<'py>,
    family: &str,
    n: u32,
    j: Option<u32>,
    precision: u32,
) -> PyResult<Bound<'py, PyList>> {
    let spec = FamilySpec { family: parse_family(family, j)?, degree: n };
    let poly = koebe::generate(&spec, precision).or_else(err)?;
    let out = PyList::empty(py);
    let first = usize::from(!matches!(spec.family, Family::EgervarySzasz));
    for k in first..=poly.degree() {
        let c = poly.coeff(k);
        let d = scalar_dict(py, &c)?;
        d.set_item("k", k)?;
        out.append(d)?;
    }
    Ok(out)
}

/// Univalence certificate for degree n.
#[pyfunction]
#[pyo3(signature = (n, precision_cap=8192))]
fn certify<'py>(py: Python<'py>, n: u32, precision_cap: u32) -> PyResult<Bound<'py, PyDict>> {
    let cert = koebe::certify_univalence(n, precision_cap).or_else(err)?;
    let d = PyDict::new(py);
    d.set_item("n", cert.n)?;
    d.set_item("root_count", cert.root_count_pos_axis)?;
    d.set_item(
        "interior_sign",
        match cert.interior_sign {
            Sign::Negative => "negative",
            Sign::Positive => "positive",
            Sign::Zero => "zero",
            Sign::Undecided => "undecided",
        },
    )?;
    d.set_item("certified", cert.is_certified())?;
    d.set_item("precision_used", cert.precision_used)?;
    Ok(d)
}

/// (1/4)·sec²(π/(N+2)), the conjectured radius for degree n.
#[pyfunction]
#[pyo3(signature = (n, precision=128))]
fn upper_bound<'py>(py: Python<'py>, n: u32, precision: u32) -> PyResult<Bound<'py, PyDict>> {
    scalar_dict(py, &koebe::upper_bound_pn(n, precision))
}

/// (1/4)·sec²(ψ_N), the Rogosinski–Szegő lower bound.
#[pyfunction]
#[pyo3(signature = (n, precision=128))]
fn lower_bound<'py>(py: Python<'py>, n: u32, precision: u32) -> PyResult<Bound<'py, PyDict>> {
    scalar_dict(py, &koebe::lower_bound_rs(n, precision).or_else(err)?)
}

/// The Rogosinski–Szegő angle ψ_N.
#[pyfunction]
#[pyo3(signature = (n, precision=128))]
fn psi<'py>(py: Python<'py>, n: u32, precision: u32) -> PyResult<Bound<'py, PyDict>> {
    scalar_dict(py, &koebe::psi_n(n, precision).or_else(err)?)
}

/// |S_N(-1)| by the closed form.
#[pyfunction]
#[pyo3(signature = (n, precision=128))]
fn suffridge_at_minus_one<'py>(py: Python<'py>, n: u32, precision: u32) -> PyResult<Bound<'py, PyDict>> {
    scalar_dict(py, &koebe::suffridge_value(n, precision))
}

/// Numeric minimum distance from the boundary image to the origin.
#[pyfunction]
#[pyo3(signature = (family, n, j=None, precision=128, grid=4096))]
fn min_distance<'py>(
    py: Python<'py>,
    family: &str,
    n: u32,
    j: Option<u32>,
    precision: u32,
    grid: usize,
) -> PyResult<Bound<'py, PyDict>> {
    let spec = FamilySpec { family: parse_family(family, j)?, degree: n };
    let poly = koebe::generate(&spec, precision).or_else(err)?;
    let tol = koebe::boundary::default_refine_tol(precision);
    let r = koebe::min_distance(&poly, grid, &tol).or_else(err)?;
    let d = PyDict::new(py);
    d.set_item("t_star", r.t_star.to_f64())?;
    d.set_item("distance", r.distance.to_f64())?;
    d.set_item("distance_decimal", r.distance.to_decimal(17))?;
    d.set_item("attained_at_minus1", r.attained_at_minus1)?;
    Ok(d)
}

/// Uniformly sampled boundary curve as (t, re, im, abs) tuples.
#[pyfunction]
#[pyo3(signature = (family, n, j=None, count=512, precision=128))]
fn boundary_samples(
    family: &str,
    n: u32,
    j: Option<u32>,
    count: usize,
    precision: u32,
) -> PyResult<Vec<(f64, f64, f64, f64)>> {
    let spec = FamilySpec { family: parse_family(family, j)?, degree: n };
    let poly = koebe::generate(&spec, precision).or_else(err)?;
    let curve = koebe::sample_curve(&poly, count).or_else(err)?;
    Ok(curve
        .samples
        .iter()
        .map(|s| (s.t.to_f64(), s.re.to_f64(), s.im.to_f64(), s.abs.to_f64()))
        .collect())
}

/// Radius-table rows for N = from..=to.
#[pyfunction]
#[pyo3(signature = (n_max, precision=128, grid=1024))]
fn radius_rows<'py>(py: Python<'py>, n_max: u32, precision: u32, grid: usize) -> PyResult<Bound<'py, PyList>> {
    let rows = koebe::radius_table(n_max, precision, grid).or_else(err)?;
    let out = PyList::empty(py);
    for r in rows {
        let d = PyDict::new(py);
        d.set_item("n", r.n)?;
        d.set_item("upper_pn", r.upper_pn.to_f64())?;
        d.set_item("suffridge_at_minus1", r.suffridge_at_minus1.to_f64())?;
        d.set_item("suffridge_boundary_min", r.suffridge_boundary_min.to_f64())?;
        d.set_item("psi_n", r.psi_n.to_f64())?;
        d.set_item("lower_rs", r.lower_rs.to_f64())?;
        d.set_item("pn_boundary_min", r.pn_boundary_min.to_f64())?;
        d.set_item("certified", r.certified)?;
        out.append(d)?;
    }
    Ok(out)
}

#[pymodule]
fn koebe_py(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_function(wrap_pyfunction!(coefficients, m)?)?;
    m.add_function(wrap_pyfunction!(certify, m)?)?;
    m.add_function(wrap_pyfunction!(upper_bound, m)?)?;
    m.add_function(wrap_pyfunction!(lower_bound, m)?)?;
    m.add_function(wrap_pyfunction!(psi, m)?)?;
    m.add_function(wrap_pyfunction!(suffridge_at_minus_one, m)?)?;
    m.add_function(wrap_pyfunction!(min_distance, m)?)?;
    m.add_function(wrap_pyfunction!(boundary_samples, m)?)?;
    m.add_function(wrap_pyfunction!(radius_rows, m)?)?;
    Ok(())
}
