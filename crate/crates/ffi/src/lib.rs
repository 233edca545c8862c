//! C ABI for hoopforge.
//!
//! Every fallible function returns an [`HfStatus`] and writes results through
//! out-pointers. On failure the message is kept per thread and can be read
//! with [`hf_last_error`]. Handles are opaque and must be released with the
//! matching `*_free` function. Strings returned through `char **` are owned by
//! the caller and released with [`hf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;
use std::sync::Arc;

use hoopforge::action::{enumerate_actions, mu, tau, validate_action, verify_bijection};
use hoopforge::extension::regular_dense_decomposition;
use hoopforge::format::{parse_algebra, write_algebra};
use hoopforge::hoop::{godel_chain, lukasiewicz_chain};
use hoopforge::morph::DEFAULT_BUDGET;
use hoopforge::suite::{run_suite, Preset, SuiteOptions};
use hoopforge::term::{holds, parse_identity};
use hoopforge::{
    ActionError, ExtensionError, FiniteHoop, HoopError, ParseError, SplitExtension,
    StrongExternalAction, Variety,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    AxiomViolation = 4,
    OutOfRange = 5,
    InvalidArgument = 6,
    Unsupported = 7,
    BudgetExceeded = 8,
    Panic = 99,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HfVariety {
    Hoop = 0,
    Basic = 1,
    Wajsberg = 2,
    Godel = 3,
    Product = 4,
}

impl From<HfVariety> for Variety {
    fn from(v: HfVariety) -> Self {
        match v {
            HfVariety::Hoop => Variety::Hoop,
            HfVariety::Basic => Variety::Basic,
            HfVariety::Wajsberg => Variety::Wajsberg,
            HfVariety::Godel => Variety::Godel,
            HfVariety::Product => Variety::Product,
        }
    }
}

/// Subvariety membership of a hoop.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct HfClassification {
    pub bounded: bool,
    pub basic: bool,
    pub wajsberg: bool,
    pub godel: bool,
    pub product: bool,
    /// Meaningful only when `bounded` is set.
    pub involutive: bool,
}

/// A validated finite hoop.
pub struct HfHoop {
    inner: Arc<FiniteHoop>,
}

/// A split extension `X -> A <-> B`.
pub struct HfExtension {
    inner: SplitExtension,
}

/// A strong external action of `B` on `X`.
pub struct HfAction {
    inner: StrongExternalAction,
}

struct Failure {
    status: HfStatus,
    message: String,
}

impl Failure {
    fn new(status: HfStatus, message: impl Into<String>) -> Self {
        Failure {
            status,
            message: message.into(),
        }
    }
}

impl From<HoopError> for Failure {
    fn from(e: HoopError) -> Self {
        let status = match e {
            HoopError::AxiomViolation { .. } => HfStatus::AxiomViolation,
            HoopError::MalformedTable(_) => HfStatus::InvalidArgument,
            HoopError::IndexOutOfRange { .. } => HfStatus::OutOfRange,
            HoopError::NotBasic | HoopError::NotBounded => HfStatus::Unsupported,
            HoopError::BudgetExceeded { .. } => HfStatus::BudgetExceeded,
        };
        Failure::new(status, e.to_string())
    }
}

impl From<ParseError> for Failure {
    fn from(e: ParseError) -> Self {
        match e {
            ParseError::Invalid(h) => h.into(),
            other => Failure::new(HfStatus::Parse, other.to_string()),
        }
    }
}

impl From<ExtensionError> for Failure {
    fn from(e: ExtensionError) -> Self {
        Failure::new(HfStatus::InvalidArgument, e.to_string())
    }
}

impl From<ActionError> for Failure {
    fn from(e: ActionError) -> Self {
        let status = match e {
            ActionError::AxiomViolation { .. } => HfStatus::AxiomViolation,
            ActionError::Hoop(HoopError::BudgetExceeded { .. }) => HfStatus::BudgetExceeded,
            ActionError::NotStrong { .. }
            | ActionError::NotBasic
            | ActionError::ProductUnsupported
            | ActionError::VarietyMismatch { .. } => HfStatus::Unsupported,
            _ => HfStatus::InvalidArgument,
        };
        Failure::new(status, e.to_string())
    }
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(message: &str) {
    let c = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> HfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            HfStatus::Ok
        }
        Ok(Err(fail)) => {
            set_error(&fail.message);
            fail.status
        }
        Err(_) => {
            set_error("internal panic");
            HfStatus::Panic
        }
    }
}

fn null(what: &str) -> Failure {
    Failure::new(HfStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(|| null(what))
}

unsafe fn write<T>(out: *mut T, value: T, what: &str) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null(what));
    }
    out.write(value);
    Ok(())
}

unsafe fn text<'a>(p: *const c_char, what: &str) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure::new(HfStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn table(p: *const usize, len: usize, what: &str) -> Result<Vec<usize>, Failure> {
    if len == 0 {
        return Ok(Vec::new());
    }
    if p.is_null() {
        return Err(null(what));
    }
    Ok(slice::from_raw_parts(p, len).to_vec())
}

fn boxed<T>(v: T) -> *mut T {
    Box::into_raw(Box::new(v))
}

fn owned_string(s: String) -> *mut c_char {
    CString::new(s).map_or(ptr::null_mut(), CString::into_raw)
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn hf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static string.
#[no_mangle]
pub extern "C" fn hf_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn hf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates an algebra in the text format.
///
/// # Safety
/// `source` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_hoop_parse(source: *const c_char, out: *mut *mut HfHoop) -> HfStatus {
    guard(|| {
        let h = parse_algebra(text(source, "source")?)?;
        write(out, boxed(HfHoop { inner: Arc::new(h) }), "out")
    })
}

/// Builds a hoop from row-major `order * order` tables. A negative `bottom`
/// means unbounded.
///
/// # Safety
/// `mul` and `imp` must point to `order * order` elements.
#[no_mangle]
pub unsafe extern "C" fn hf_hoop_from_tables(
    order: usize,
    unit: usize,
    mul: *const usize,
    imp: *const usize,
    bottom: isize,
    out: *mut *mut HfHoop,
) -> HfStatus {
    guard(|| {
        let n2 = order
            .checked_mul(order)
            .ok_or_else(|| Failure::new(HfStatus::InvalidArgument, "order too large"))?;
        let mul = table(mul, n2, "mul")?;
        let imp = table(imp, n2, "imp")?;
        let bottom = usize::try_from(bottom).ok();
        let h = FiniteHoop::new(order, unit, mul, imp, bottom)?;
        write(out, boxed(HfHoop { inner: Arc::new(h) }), "out")
    })
}

/// The `n`-element Lukasiewicz chain (`godel == false`) or Godel chain.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn hf_hoop_chain(n: usize, godel: bool, out: *mut *mut HfHoop) -> HfStatus {
    guard(|| {
        if n == 0 {
            return Err(Failure::new(
                HfStatus::InvalidArgument,
                "a chain needs at least one element",
            ));
        }
        let h = if godel {
            godel_chain(n)
        } else {
            lukasiewicz_chain(n)
        };
        write(out, boxed(HfHoop { inner: Arc::new(h) }), "out")
    })
}

/// # Safety
/// `h` must be null or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn hf_hoop_free(h: *mut HfHoop) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// Number of elements, or 0 for a null handle.
///
/// # Safety
/// `h` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hf_hoop_order(h: *const HfHoop) -> usize {
    h.as_ref().map_or(0, |h| h.inner.order())
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_hoop_unit(h: *const HfHoop, out: *mut usize) -> HfStatus {
    guard(|| write(out, deref(h, "hoop")?.inner.unit(), "out"))
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_hoop_mul(
    h: *const HfHoop,
    x: usize,
    y: usize,
    out: *mut usize,
) -> HfStatus {
    guard(|| {
        let h = &deref(h, "hoop")?.inner;
        h.check_index(x)?;
        h.check_index(y)?;
        write(out, h.mul(x, y), "out")
    })
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_hoop_imp(
    h: *const HfHoop,
    x: usize,
    y: usize,
    out: *mut usize,
) -> HfStatus {
    guard(|| {
        let h = &deref(h, "hoop")?.inner;
        h.check_index(x)?;
        h.check_index(y)?;
        write(out, h.imp(x, y), "out")
    })
}

/// # Safety
/// `h` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_hoop_classify(
    h: *const HfHoop,
    out: *mut HfClassification,
) -> HfStatus {
    guard(|| {
        let r = deref(h, "hoop")?.inner.classify();
        let c = HfClassification {
            bounded: r.is_bounded,
            basic: r.is_basic,
            wajsberg: r.is_wajsberg,
            godel: r.is_godel,
            product: r.is_product,
            involutive: r.is_involutive.unwrap_or(false),
        };
        write(out, c, "out")
    })
}

/// Writes the hoop in the text format. Free the result with
/// [`hf_string_free`].
///
/// # Safety
/// `h` must be a live handle, `name` a NUL-terminated string, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_hoop_to_text(
    h: *const HfHoop,
    name: *const c_char,
    out: *mut *mut c_char,
) -> HfStatus {
    guard(|| {
        let s = write_algebra(text(name, "name")?, &deref(h, "hoop")?.inner);
        write(out, owned_string(s), "out")
    })
}

/// Checks an identity such as `"forall x y : x * y = y * x"`.
///
/// # Safety
/// `h` must be a live handle, `identity` a NUL-terminated string, `out`
/// writable.
#[no_mangle]
pub unsafe extern "C" fn hf_hoop_check_identity(
    h: *const HfHoop,
    identity: *const c_char,
    out: *mut bool,
) -> HfStatus {
    guard(|| {
        let id = parse_identity(text(identity, "identity")?)
            .map_err(|e| Failure::new(HfStatus::Parse, e.to_string()))?;
        let v = holds(&deref(h, "hoop")?.inner, &id)
            .map_err(|e| Failure::new(HfStatus::Unsupported, e.to_string()))?;
        write(out, v.holds(), "out")
    })
}

/// Builds a split extension from index maps `k: X -> A`, `p: A -> B` and
/// `s: B -> A`.
///
/// # Safety
/// Handles must be live; each map must point to as many elements as its
/// domain has.
#[no_mangle]
pub unsafe extern "C" fn hf_extension_new(
    x: *const HfHoop,
    a: *const HfHoop,
    b: *const HfHoop,
    k: *const usize,
    p: *const usize,
    s: *const usize,
    out: *mut *mut HfExtension,
) -> HfStatus {
    guard(|| {
        let (x, a, b) = (
            deref(x, "x")?.inner.clone(),
            deref(a, "a")?.inner.clone(),
            deref(b, "b")?.inner.clone(),
        );
        let k = table(k, x.order(), "k")?;
        let p = table(p, a.order(), "p")?;
        let s = table(s, b.order(), "s")?;
        let e = SplitExtension::new(x, a, b, k, p, s)?;
        write(out, boxed(HfExtension { inner: e }), "out")
    })
}

/// The regular and dense decomposition of a bounded hoop.
///
/// # Safety
/// `a` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_extension_decompose(
    a: *const HfHoop,
    out: *mut *mut HfExtension,
) -> HfStatus {
    guard(|| {
        let e = regular_dense_decomposition(&deref(a, "a")?.inner)?;
        write(out, boxed(HfExtension { inner: e }), "out")
    })
}

/// # Safety
/// `e` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hf_extension_free(e: *mut HfExtension) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// # Safety
/// `e` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_extension_is_strong(e: *const HfExtension, out: *mut bool) -> HfStatus {
    guard(|| write(out, deref(e, "extension")?.inner.is_strong(), "out"))
}

/// Middle algebra of the extension as a new handle.
///
/// # Safety
/// `e` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_extension_middle(
    e: *const HfExtension,
    out: *mut *mut HfHoop,
) -> HfStatus {
    guard(|| {
        let a = deref(e, "extension")?.inner.a().clone();
        write(out, boxed(HfHoop { inner: a }), "out")
    })
}

/// The action of a strong extension.
///
/// # Safety
/// `e` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_extension_action(
    e: *const HfExtension,
    out: *mut *mut HfAction,
) -> HfStatus {
    guard(|| {
        let act = tau(&deref(e, "extension")?.inner)?;
        write(out, boxed(HfAction { inner: act }), "out")
    })
}

/// Validates an action from row-major `|B| * |X|` tables of `f` and `g`.
///
/// # Safety
/// Handles must be live; `f` and `g` must point to `|B| * |X|` elements.
#[no_mangle]
pub unsafe extern "C" fn hf_action_new(
    b: *const HfHoop,
    x: *const HfHoop,
    f: *const usize,
    g: *const usize,
    variety: HfVariety,
    out: *mut *mut HfAction,
) -> HfStatus {
    guard(|| {
        let (b, x) = (deref(b, "b")?.inner.clone(), deref(x, "x")?.inner.clone());
        let len = b.order() * x.order();
        let act = validate_action(
            b,
            x,
            table(f, len, "f")?,
            table(g, len, "g")?,
            variety.into(),
        )?;
        write(out, boxed(HfAction { inner: act }), "out")
    })
}

/// # Safety
/// `act` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn hf_action_free(act: *mut HfAction) {
    if !act.is_null() {
        drop(Box::from_raw(act));
    }
}

/// `f_b(x)` and `g_b(x)`.
///
/// # Safety
/// `act` must be a live handle; `f` and `g` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_action_apply(
    act: *const HfAction,
    b: usize,
    x: usize,
    f: *mut usize,
    g: *mut usize,
) -> HfStatus {
    guard(|| {
        let act = &deref(act, "action")?.inner;
        act.b().check_index(b)?;
        act.x().check_index(x)?;
        write(f, act.f(b, x), "f")?;
        write(g, act.g(b, x), "g")
    })
}

/// The strong extension built from the action.
///
/// # Safety
/// `act` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_action_extension(
    act: *const HfAction,
    out: *mut *mut HfExtension,
) -> HfStatus {
    guard(|| {
        let e = mu(&deref(act, "action")?.inner)?;
        write(out, boxed(HfExtension { inner: e }), "out")
    })
}

/// Number of actions of `b` on `x` within `variety`.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_action_count(
    b: *const HfHoop,
    x: *const HfHoop,
    variety: HfVariety,
    out: *mut usize,
) -> HfStatus {
    guard(|| {
        let acts = enumerate_actions(
            &deref(b, "b")?.inner,
            &deref(x, "x")?.inner,
            variety.into(),
            DEFAULT_BUDGET,
        )?;
        write(out, acts.len(), "out")
    })
}

/// Whether actions and strong extensions of `b` by `x` correspond. With
/// `oracle`, extensions are also found by direct search.
///
/// # Safety
/// Handles must be live and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_verify_bijection(
    b: *const HfHoop,
    x: *const HfHoop,
    variety: HfVariety,
    oracle: bool,
    out: *mut bool,
) -> HfStatus {
    guard(|| {
        let r = verify_bijection(
            &deref(b, "b")?.inner,
            &deref(x, "x")?.inner,
            variety.into(),
            oracle,
            DEFAULT_BUDGET,
        )?;
        write(out, r.ok(), "out")
    })
}

/// Runs a named suite and returns its JSON report. `max_order` 0 keeps the
/// preset's default.
///
/// # Safety
/// `preset` must be a NUL-terminated string; `json` and `passed` writable.
#[no_mangle]
pub unsafe extern "C" fn hf_suite_run(
    preset: *const c_char,
    max_order: usize,
    jobs: usize,
    oracle: bool,
    json: *mut *mut c_char,
    passed: *mut bool,
) -> HfStatus {
    guard(|| {
        let preset: Preset = text(preset, "preset")?
            .parse()
            .map_err(|e: String| Failure::new(HfStatus::InvalidArgument, e))?;
        let opts = SuiteOptions {
            max_order: (max_order > 0).then_some(max_order),
            jobs: jobs.max(1),
            oracle,
            ..SuiteOptions::default()
        };
        let r = run_suite(preset, &opts)
            .map_err(|e| Failure::new(HfStatus::InvalidArgument, e.to_string()))?;
        write(passed, r.passed(), "passed")?;
        write(json, owned_string(r.to_json()), "json")
    })
}
