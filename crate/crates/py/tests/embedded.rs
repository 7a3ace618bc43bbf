use std::ffi::CString;

use pyo3::prelude::*;

use locoh_py::locoh_module;

fn with_module(code: &str) {
    pyo3::append_to_inittab!(locoh_module);
    Python::initialize();
    Python::attach(|py| {
        let code = CString::new(code).unwrap();
        py.run(&code, None, None).map_err(|e| e.display(py)).unwrap();
    });
}

#[test]
fn module_api_from_python() {
    with_module(
        r#"
import locoh
assert locoh.det_b(3) == locoh.tau(3)
assert str(locoh.Poly("x + y") * locoh.Poly("x - y")) == str(locoh.Poly("x^2 - y^2"))
unit, factors = locoh.factor_tau(5)
assert sum(k for _, k in factors) == 3
g = locoh.accumulate_distinct([1, 2, 4, 6])
assert g["strictly_increasing"]
w = locoh.torsion_witness(4)
assert w["nonmembership_index"] is not None
assert locoh.Poly("2*x", "fp:3").field == "fp:3"
try:
    locoh.Poly("x") + locoh.Poly("x", "fp:5")
    raise AssertionError("mixed fields accepted")
except ValueError:
    pass
"#,
    );
}
