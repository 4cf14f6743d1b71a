//! C ABI for `infobound`.
//!
//! Every fallible function returns an [`IbStatus`]; on failure a message is
//! available from [`ib_last_error_message`] on the same thread. Results are
//! written through out-pointers. Scenario sets and report lists are opaque
//! handles released with their `_free` function. All quantities crossing
//! the boundary are plain SI magnitudes (kg, m, s, J, J/K).

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use infobound::bounds::{self, SystemSpec};
use infobound::qparser::EvalError;
use infobound::scenarios::{self, BoundReport, ReportFormat, ScenarioFile};
use infobound::schwarzschild as bh;
use infobound::{BlackHole, Dimension, Error, PhysicalConstants, Quantity, QuantityError};

const K: PhysicalConstants = PhysicalConstants::SI;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IbStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    Dimension = 4,
    InvalidArgument = 5,
    Arithmetic = 6,
    Scenario = 7,
    Io = 8,
    OutOfRange = 9,
    Panic = 10,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum IbFormat {
    Table = 0,
    Json = 1,
}

/// A dimensioned value: SI magnitude and exponents of kg, m, s, K.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct IbQuantity {
    pub magnitude: f64,
    pub mass: i32,
    pub length: i32,
    pub time: i32,
    pub temperature: i32,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct IbBlackHole {
    pub mass_kg: f64,
    pub radius_m: f64,
    pub horizon_area_m2: f64,
    pub entropy_j_per_k: f64,
    pub capture_cross_section_m2: f64,
    pub min_capture_momentum_kg_m_per_s: f64,
    pub min_bit_energy_j: f64,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct IbStorageBound {
    pub term_quadratic: f64,
    pub term_entropy: f64,
    pub term_linear: f64,
    pub rhs: f64,
    pub min_mass_kg: f64,
    pub n_max_bits: f64,
    pub infeasible: bool,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct IbReportSummary {
    pub length_m: f64,
    pub energy_j: f64,
    pub entropy_j_per_k: f64,
    pub mu: f64,
    pub bh_limit_bits: f64,
    pub storage: IbStorageBound,
    pub landauer_floor_j_per_k: f64,
    /// Only meaningful when `has_gap` is true.
    pub log10_gap: f64,
    pub has_gap: bool,
}

/// A validated scenario file.
pub struct IbScenarioSet {
    file: ScenarioFile,
}

/// Evaluated reports, in scenario order.
pub struct IbReportList {
    reports: Vec<BoundReport>,
    names: Vec<CString>,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_last_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Failure(IbStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match &e {
            Error::Quantity(q) | Error::Eval(EvalError { error: q, .. }) => match q {
                QuantityError::DimensionMismatch { .. } | QuantityError::NonSquareDimension => {
                    IbStatus::Dimension
                }
                _ => IbStatus::Arithmetic,
            },
            Error::Parse(_) => IbStatus::Parse,
            Error::InvalidArgument { .. } => IbStatus::InvalidArgument,
            Error::Scenario { .. } | Error::ScenarioFile(_) | Error::Json(_) => IbStatus::Scenario,
            Error::Io { .. } => IbStatus::Io,
        };
        Failure(status, e.to_string())
    }
}

impl From<QuantityError> for Failure {
    fn from(e: QuantityError) -> Self {
        Error::from(e).into()
    }
}

fn fail<T>(status: IbStatus, msg: impl Into<String>) -> Result<T, Failure> {
    Err(Failure(status, msg.into()))
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> IbStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            IbStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_last_error(&msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            IbStatus::Panic
        }
    }
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return fail(IbStatus::NullPointer, format!("{what} is null"));
    }
    CStr::from_ptr(p)
        .to_str()
        .or_else(|_| fail(IbStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

unsafe fn out<'a, T>(p: *mut T) -> Result<&'a mut T, Failure> {
    p.as_mut()
        .map_or_else(|| fail(IbStatus::NullPointer, "output pointer is null"), Ok)
}

fn to_ffi(q: Quantity) -> IbQuantity {
    let [mass, length, time, temperature] = q.dimension().exponents();
    IbQuantity {
        magnitude: q.magnitude(),
        mass,
        length,
        time,
        temperature,
    }
}

fn from_ffi(q: &IbQuantity) -> Result<Quantity, Failure> {
    let dim = Dimension::new(q.mass, q.length, q.time, q.temperature);
    Ok(Quantity::new(q.magnitude, dim)?)
}

fn storage(b: &bounds::StorageBoundBreakdown) -> IbStorageBound {
    IbStorageBound {
        term_quadratic: b.term_quadratic,
        term_entropy: b.term_entropy,
        term_linear: b.term_linear,
        rhs: b.rhs,
        min_mass_kg: b.min_mass,
        n_max_bits: b.n_max_bits,
        infeasible: b.infeasible,
    }
}

fn system(length_m: f64, energy_j: f64, entropy_j_per_k: f64, mu: f64) -> Result<SystemSpec, Failure> {
    Ok(SystemSpec::new(
        Quantity::meters(length_m)?,
        Quantity::joules(energy_j)?,
        Quantity::joules_per_kelvin(entropy_j_per_k)?,
        mu,
    )?)
}

/// Message for the last failed call on this thread, or an empty string.
/// The pointer stays valid until the next `ib_` call on the same thread.
#[no_mangle]
pub extern "C" fn ib_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static, NUL-terminated name of a status code.
#[no_mangle]
pub extern "C" fn ib_status_name(status: IbStatus) -> *const c_char {
    let s: &'static CStr = match status {
        IbStatus::Ok => c"ok",
        IbStatus::NullPointer => c"null pointer",
        IbStatus::InvalidUtf8 => c"invalid utf-8",
        IbStatus::Parse => c"parse error",
        IbStatus::Dimension => c"dimension error",
        IbStatus::InvalidArgument => c"invalid argument",
        IbStatus::Arithmetic => c"arithmetic error",
        IbStatus::Scenario => c"scenario error",
        IbStatus::Io => c"i/o error",
        IbStatus::OutOfRange => c"index out of range",
        IbStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

/// The relativistic capture factor sqrt(27/4).
#[no_mangle]
pub extern "C" fn ib_default_mu() -> f64 {
    infobound::RELATIVISTIC_MU
}

/// Parses and evaluates a quantity expression such as `"1 GW * 10 fs"`.
///
/// # Safety
/// `expr` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ib_eval(expr: *const c_char, out_q: *mut IbQuantity) -> IbStatus {
    guard(|| {
        let q = infobound::qparser::evaluate_str(text(expr, "expr")?)?;
        *out(out_q)? = to_ffi(q);
        Ok(())
    })
}

/// Expresses `q` as a multiple of the unit expression `unit`.
///
/// # Safety
/// `q` must point to a valid `IbQuantity`, `unit` must be a NUL-terminated
/// string and `out_value` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ib_value_in(
    q: *const IbQuantity,
    unit: *const c_char,
    out_value: *mut f64,
) -> IbStatus {
    guard(|| {
        let Some(q) = q.as_ref() else {
            return fail(IbStatus::NullPointer, "quantity is null");
        };
        let v = from_ffi(q)?.value_in(text(unit, "unit")?)?;
        *out(out_value)? = v;
        Ok(())
    })
}

/// Properties of a Schwarzschild hole of `mass_kg` with capture factor `mu`.
///
/// # Safety
/// `out_props` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ib_blackhole(mass_kg: f64, mu: f64, out_props: *mut IbBlackHole) -> IbStatus {
    guard(|| {
        let hole = BlackHole::from_kilograms(mass_kg)?;
        let props = IbBlackHole {
            mass_kg,
            radius_m: bh::radius(&K, &hole)?.magnitude(),
            horizon_area_m2: bh::horizon_area(&K, &hole)?.magnitude(),
            entropy_j_per_k: bh::entropy(&K, &hole)?.magnitude(),
            capture_cross_section_m2: bh::capture_cross_section(&K, &hole, mu)?.magnitude(),
            min_capture_momentum_kg_m_per_s: bh::min_capture_momentum(&K, &hole, mu)?.magnitude(),
            min_bit_energy_j: bh::min_bit_energy(&K, &hole, mu)?.magnitude(),
        };
        *out(out_props)? = props;
        Ok(())
    })
}

/// Areal limit in bits for a region of extent `length_m`.
///
/// # Safety
/// `out_bits` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ib_bekenstein_hawking_limit(length_m: f64, out_bits: *mut f64) -> IbStatus {
    guard(|| {
        let bits = bounds::bekenstein_hawking_limit(&K, &Quantity::meters(length_m)?)?;
        *out(out_bits)? = bits;
        Ok(())
    })
}

/// Per-bit entropy floor (2π/μ) k_B, in J/K.
///
/// # Safety
/// `out_entropy` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ib_landauer_floor(mu: f64, out_entropy: *mut f64) -> IbStatus {
    guard(|| {
        let s = bounds::landauer_floor(&K, mu)?;
        *out(out_entropy)? = s.magnitude();
        Ok(())
    })
}

/// Entropy n k_B ln 2, in J/K, for erasing `bits` bits.
///
/// # Safety
/// `out_entropy` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ib_landauer_erasure_entropy(bits: f64, out_entropy: *mut f64) -> IbStatus {
    guard(|| {
        let s = bounds::landauer_erasure_entropy(&K, bits)?;
        *out(out_entropy)? = s.magnitude();
        Ok(())
    })
}

/// Storage bound for a system of extent `length_m`, total energy
/// `energy_j` and intrinsic entropy `entropy_j_per_k`.
///
/// # Safety
/// `out_bound` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ib_storage_bound(
    length_m: f64,
    energy_j: f64,
    entropy_j_per_k: f64,
    mu: f64,
    out_bound: *mut IbStorageBound,
) -> IbStatus {
    guard(|| {
        let spec = system(length_m, energy_j, entropy_j_per_k, mu)?;
        let b = bounds::storage_bound_bits(&K, &spec)?;
        *out(out_bound)? = storage(&b);
        Ok(())
    })
}

/// Second-law slack, in units of k_B, for dropping the system carrying
/// `bits` bits into a hole of `hole_mass_kg`.
///
/// # Safety
/// `out_slack` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ib_absorption_slack(
    length_m: f64,
    energy_j: f64,
    entropy_j_per_k: f64,
    mu: f64,
    bits: f64,
    hole_mass_kg: f64,
    out_slack: *mut f64,
) -> IbStatus {
    guard(|| {
        let spec = system(length_m, energy_j, entropy_j_per_k, mu)?;
        let hole = BlackHole::from_kilograms(hole_mass_kg)?;
        let s = bounds::absorption_inequality_slack(&K, &spec, bits, &hole)?;
        *out(out_slack)? = s;
        Ok(())
    })
}

/// Parses and validates a scenario document held in memory.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out_set` must be writable. The
/// returned handle is released with `ib_scenarios_free`.
#[no_mangle]
pub unsafe extern "C" fn ib_scenarios_load_str(
    json: *const c_char,
    out_set: *mut *mut IbScenarioSet,
) -> IbStatus {
    guard(|| {
        let slot = out(out_set)?;
        *slot = ptr::null_mut();
        let file = scenarios::load_scenarios_str(text(json, "json")?, &K)?;
        *slot = Box::into_raw(Box::new(IbScenarioSet { file }));
        Ok(())
    })
}

/// Loads and validates a scenario file.
///
/// # Safety
/// `path` must be a NUL-terminated string; `out_set` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ib_scenarios_load_file(
    path: *const c_char,
    out_set: *mut *mut IbScenarioSet,
) -> IbStatus {
    guard(|| {
        let slot = out(out_set)?;
        *slot = ptr::null_mut();
        let file = scenarios::load_scenarios_path(text(path, "path")?, &K)?;
        *slot = Box::into_raw(Box::new(IbScenarioSet { file }));
        Ok(())
    })
}

/// Number of scenarios in the set; 0 for a null handle.
///
/// # Safety
/// `set` must be null or a live handle from `ib_scenarios_load_*`.
#[no_mangle]
pub unsafe extern "C" fn ib_scenarios_len(set: *const IbScenarioSet) -> usize {
    set.as_ref().map_or(0, |s| s.file.len())
}

/// # Safety
/// `set` must be null or a live handle; it must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ib_scenarios_free(set: *mut IbScenarioSet) {
    if !set.is_null() {
        drop(Box::from_raw(set));
    }
}

/// Evaluates every scenario.
///
/// # Safety
/// `set` must be a live handle; `out_list` must be writable. The list is
/// released with `ib_reports_free`.
#[no_mangle]
pub unsafe extern "C" fn ib_scenarios_evaluate(
    set: *const IbScenarioSet,
    out_list: *mut *mut IbReportList,
) -> IbStatus {
    guard(|| {
        let slot = out(out_list)?;
        *slot = ptr::null_mut();
        let Some(set) = set.as_ref() else {
            return fail(IbStatus::NullPointer, "scenario set is null");
        };
        let reports = scenarios::evaluate(&set.file, &K)?;
        let names = reports
            .iter()
            .map(|r| CString::new(r.name.replace('\0', " ")).unwrap_or_default())
            .collect();
        *slot = Box::into_raw(Box::new(IbReportList { reports, names }));
        Ok(())
    })
}

/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ib_reports_len(list: *const IbReportList) -> usize {
    list.as_ref().map_or(0, |l| l.reports.len())
}

/// Scenario name of report `index`, or null when out of range. Owned by
/// the list.
///
/// # Safety
/// `list` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn ib_reports_name(list: *const IbReportList, index: usize) -> *const c_char {
    list.as_ref()
        .and_then(|l| l.names.get(index))
        .map_or(ptr::null(), |n| n.as_ptr())
}

/// Numeric summary of report `index`.
///
/// # Safety
/// `list` must be a live handle; `out_summary` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ib_reports_get(
    list: *const IbReportList,
    index: usize,
    out_summary: *mut IbReportSummary,
) -> IbStatus {
    guard(|| {
        let Some(list) = list.as_ref() else {
            return fail(IbStatus::NullPointer, "report list is null");
        };
        let Some(r) = list.reports.get(index) else {
            return fail(
                IbStatus::OutOfRange,
                format!("index {index} out of range for {} reports", list.reports.len()),
            );
        };
        *out(out_summary)? = IbReportSummary {
            length_m: r.length.magnitude(),
            energy_j: r.energy.magnitude(),
            entropy_j_per_k: r.entropy.magnitude(),
            mu: r.mu,
            bh_limit_bits: r.bh_limit_bits,
            storage: storage(&r.storage),
            landauer_floor_j_per_k: r.landauer_floor.magnitude(),
            log10_gap: r.log10_gap.unwrap_or(f64::NAN),
            has_gap: r.log10_gap.is_some(),
        };
        Ok(())
    })
}

/// Renders the list as a table or JSON. The string is released with
/// `ib_string_free`.
///
/// # Safety
/// `list` must be a live handle; `out_text` must be writable.
#[no_mangle]
pub unsafe extern "C" fn ib_reports_render(
    list: *const IbReportList,
    format: IbFormat,
    out_text: *mut *mut c_char,
) -> IbStatus {
    guard(|| {
        let slot = out(out_text)?;
        *slot = ptr::null_mut();
        let Some(list) = list.as_ref() else {
            return fail(IbStatus::NullPointer, "report list is null");
        };
        let format = match format {
            IbFormat::Table => ReportFormat::Table,
            IbFormat::Json => ReportFormat::Json,
        };
        let s = scenarios::render(&list.reports, format, &K);
        *slot = CString::new(s)
            .or_else(|_| fail(IbStatus::Scenario, "rendered text contains NUL"))?
            .into_raw();
        Ok(())
    })
}

/// # Safety
/// `list` must be null or a live handle; it must not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn ib_reports_free(list: *mut IbReportList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// # Safety
/// `s` must be null or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn ib_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
