//! C ABI for `cpshift`.
//!
//! Every function returns a [`CpsStatus`]; on failure the message is kept in
//! a thread-local slot readable through [`cps_last_error_message`]. A null
//! settings handle selects the default tolerances. Panics never cross the
//! boundary; they are reported as [`CpsStatus::Panic`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use cpshift::halfplane::{force_direction, xi_halfplane_nonretarded, ForceOptions};
use cpshift::wire::xi_wire_retarded_limit;
use cpshift::{
    energy_shift, xi_halfplane, xi_plane, xi_wire, Error, Geometry, HalfPlaneConfig, PlaneConfig, QuadSettings,
    Transition, WireConfig, XiTriple,
};

/// Result code of every call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpsStatus {
    Ok = 0,
    NullPointer = 1,
    /// A parameter is outside its domain (negative distance, atom inside the wire, ...).
    InvalidArgument = 2,
    /// The configuration is valid but closer to the surface than supported;
    /// use the plane-mirror results instead.
    OutOfRange = 3,
    /// An integral or series failed to reach the requested tolerance.
    NoConvergence = 4,
    Panic = 5,
}

/// Tolerances shared by all evaluations. Create with [`cps_settings_new`],
/// release with [`cps_settings_free`].
pub struct CpsSettings {
    inner: QuadSettings,
}

/// The three response functions and an absolute error estimate.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CpsXi {
    pub rho: f64,
    pub phi: f64,
    pub z: f64,
    pub error_estimate: f64,
}

impl From<XiTriple> for CpsXi {
    fn from(x: XiTriple) -> Self {
        CpsXi {
            rho: x.rho_comp,
            phi: x.phi_comp,
            z: x.z_comp,
            error_estimate: x.error_estimate,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CpsGeometryKind {
    /// `a` = distance `d`.
    Plane = 0,
    /// `a` = radius `R`, `b` = distance `rho` from the axis.
    Wire = 1,
    /// `a` = distance `rho` from the edge, `b` = angle `phi`.
    HalfPlane = 2,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CpsGeometry {
    /// One of the `CpsGeometryKind` values; anything else is rejected.
    pub kind: i32,
    pub a: f64,
    pub b: f64,
}

impl TryFrom<CpsGeometry> for Geometry {
    type Error = (CpsStatus, String);

    fn try_from(g: CpsGeometry) -> Result<Self, Self::Error> {
        const PLANE: i32 = CpsGeometryKind::Plane as i32;
        const WIRE: i32 = CpsGeometryKind::Wire as i32;
        const HALF_PLANE: i32 = CpsGeometryKind::HalfPlane as i32;
        match g.kind {
            PLANE => Ok(Geometry::Plane { d: g.a }),
            WIRE => Ok(Geometry::Wire { radius: g.a, rho: g.b }),
            HALF_PLANE => Ok(Geometry::HalfPlane { rho: g.a, phi: g.b }),
            k => Err((CpsStatus::InvalidArgument, format!("unknown geometry kind {k}"))),
        }
    }
}

/// One dipole transition: energy and `(|μ_ρ|², |μ_φ|², |μ_z|²)`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct CpsTransition {
    pub energy: f64,
    pub mu_sq: [f64; 3],
}

/// Unit vector of the force on an isotropic atom near a half-plane.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq)]
pub struct CpsForceDirection {
    pub e_rho: f64,
    pub e_phi: f64,
    /// Nonzero when the gradient vanished and the direction is meaningless.
    pub degenerate: i32,
    /// Nonzero when the retarded closed forms were used.
    pub asymptotic: i32,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> CpsStatus {
    match e {
        Error::Domain(_) | Error::InvalidConfig(_) | Error::OrderTooLarge { .. } => CpsStatus::InvalidArgument,
        Error::GapTooSmall { .. } | Error::PlaneLimit { .. } => CpsStatus::OutOfRange,
        Error::NoConvergence { .. } | Error::SeriesNoConvergence { .. } | Error::NonFinite { .. } => {
            CpsStatus::NoConvergence
        }
        Error::Transition { source, .. } => status_of(source),
    }
}

/// Runs `f`, recording any error or panic in the thread-local slot.
fn guard(f: impl FnOnce() -> Result<(), (CpsStatus, String)>) -> CpsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            CpsStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_last_error(format!("internal panic: {msg}"));
            CpsStatus::Panic
        }
    }
}

fn numeric(e: Error) -> (CpsStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (CpsStatus, String) {
    (CpsStatus::NullPointer, format!("{what} is null"))
}

/// # Safety
/// `settings` must be null or a live handle from [`cps_settings_new`].
unsafe fn settings_of(settings: *const CpsSettings) -> QuadSettings {
    settings.as_ref().map_or_else(QuadSettings::default, |s| s.inner)
}

/// # Safety
/// `out` must be null or valid for writes.
unsafe fn write<T>(out: *mut T, value: T) -> Result<(), (CpsStatus, String)> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

/// Message of the last failed call on this thread, or an empty string. The
/// pointer stays valid until the next call into this library on the same
/// thread.
#[no_mangle]
pub extern "C" fn cps_last_error_message() -> *const c_char {
    static EMPTY: &CStr = c"";
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(EMPTY.as_ptr(), |s| s.as_ptr()))
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn cps_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

/// New settings handle with default tolerances.
#[no_mangle]
pub extern "C" fn cps_settings_new() -> *mut CpsSettings {
    Box::into_raw(Box::new(CpsSettings {
        inner: QuadSettings::default(),
    }))
}

/// # Safety
/// `settings` must be null or a handle from [`cps_settings_new`] that has
/// not been freed.
#[no_mangle]
pub unsafe extern "C" fn cps_settings_free(settings: *mut CpsSettings) {
    if !settings.is_null() {
        drop(Box::from_raw(settings));
    }
}

/// # Safety
/// `settings` must be null or a live handle.
unsafe fn update(settings: *mut CpsSettings, f: impl FnOnce(&mut QuadSettings)) -> CpsStatus {
    guard(|| {
        let s = settings.as_mut().ok_or_else(|| null("settings"))?;
        let mut next = s.inner;
        f(&mut next);
        next.validate().map_err(numeric)?;
        s.inner = next;
        Ok(())
    })
}

/// Relative tolerance of every integral (default `1e-8`).
///
/// # Safety
/// `settings` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cps_settings_set_rel_tol(settings: *mut CpsSettings, rel_tol: f64) -> CpsStatus {
    update(settings, |s| s.rel_tol = rel_tol)
}

/// Absolute tolerance floor (default `1e-14`).
///
/// # Safety
/// `settings` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cps_settings_set_abs_tol(settings: *mut CpsSettings, abs_tol: f64) -> CpsStatus {
    update(settings, |s| s.abs_tol = abs_tol)
}

/// Largest order of the wire's angular-momentum series (default `50000`).
///
/// # Safety
/// `settings` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cps_settings_set_m_max(settings: *mut CpsSettings, m_max: usize) -> CpsStatus {
    update(settings, |s| s.m_max = m_max)
}

/// `(Ξ_⊥, Ξ_∥, Ξ_∥)` for a plane mirror at distance `d`.
///
/// # Safety
/// `settings` must be null or a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cps_xi_plane(settings: *const CpsSettings, d: f64, energy: f64, out: *mut CpsXi) -> CpsStatus {
    guard(|| {
        let x = xi_plane(&PlaneConfig::new(d, energy), &settings_of(settings)).map_err(numeric)?;
        write(out, x.into())
    })
}

/// `Ξ` outside a wire of radius `radius`, atom at `rho` from the axis.
///
/// # Safety
/// `settings` must be null or a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cps_xi_wire(
    settings: *const CpsSettings,
    radius: f64,
    rho: f64,
    energy: f64,
    out: *mut CpsXi,
) -> CpsStatus {
    guard(|| {
        let x = xi_wire(&WireConfig::new(radius, rho, energy), &settings_of(settings)).map_err(numeric)?;
        write(out, x.into())
    })
}

/// `lim E·Ξ` as `E → ∞` for the wire.
///
/// # Safety
/// `settings` must be null or a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cps_xi_wire_retarded_limit(
    settings: *const CpsSettings,
    radius: f64,
    rho: f64,
    out: *mut CpsXi,
) -> CpsStatus {
    guard(|| {
        let x = xi_wire_retarded_limit(radius, rho, &settings_of(settings)).map_err(numeric)?;
        write(out, x.into())
    })
}

/// `Ξ` near a half-plane; `rho` from the edge, `phi` measured from the
/// conductor.
///
/// # Safety
/// `settings` must be null or a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cps_xi_halfplane(
    settings: *const CpsSettings,
    rho: f64,
    phi: f64,
    energy: f64,
    out: *mut CpsXi,
) -> CpsStatus {
    guard(|| {
        let x = xi_halfplane(&HalfPlaneConfig::new(rho, phi, energy), &settings_of(settings)).map_err(numeric)?;
        write(out, x.into())
    })
}

/// Electrostatic closed forms for the half-plane.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cps_xi_halfplane_nonretarded(rho: f64, phi: f64, out: *mut CpsXi) -> CpsStatus {
    guard(|| {
        let x = xi_halfplane_nonretarded(rho, phi).map_err(numeric)?;
        write(out, x.into())
    })
}

/// Direction of the force on an isotropic atom near a half-plane.
///
/// # Safety
/// `settings` must be null or a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cps_force_direction_halfplane(
    settings: *const CpsSettings,
    rho: f64,
    phi: f64,
    energy: f64,
    out: *mut CpsForceDirection,
) -> CpsStatus {
    guard(|| {
        let f = force_direction(rho, phi, energy, &settings_of(settings), &ForceOptions::default()).map_err(numeric)?;
        write(
            out,
            CpsForceDirection {
                e_rho: f.e_rho,
                e_phi: f.e_phi,
                degenerate: f.degenerate.into(),
                asymptotic: f.asymptotic.into(),
            },
        )
    })
}

/// Energy shift `ΔW = -Σ Ξ_i(E_j) |μ_i|²` summed over `count` transitions,
/// in `μ²/(4πε₀L³)`.
///
/// # Safety
/// `settings` must be null or a live handle; `transitions` must point to
/// `count` readable elements; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn cps_energy_shift(
    settings: *const CpsSettings,
    geometry: CpsGeometry,
    transitions: *const CpsTransition,
    count: usize,
    out: *mut f64,
) -> CpsStatus {
    guard(|| {
        if transitions.is_null() {
            return Err(null("transitions"));
        }
        let list: Vec<Transition> = std::slice::from_raw_parts(transitions, count)
            .iter()
            .map(|t| Transition::new(t.energy, t.mu_sq))
            .collect();
        let w = energy_shift(&geometry.try_into()?, &list, &settings_of(settings)).map_err(numeric)?;
        write(out, w.value)
    })
}
