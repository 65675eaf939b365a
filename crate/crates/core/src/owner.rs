//! Composite owner labels such as `A◇B`.

use crate::opinion::Opinion;

/// Cumulative fusion.
pub const CUMULATIVE_FUSION: &str = "◇";
/// Averaging fusion (underlined diamond).
pub const AVERAGING_FUSION: &str = "◇\u{332}";
/// Cumulative fission (overlined diamond).
pub const CUMULATIVE_FISSION: &str = "◇\u{304}";
/// Averaging fission (over- and underlined diamond).
pub const AVERAGING_FISSION: &str = "◇\u{332}\u{304}";

fn wrap(label: &str) -> String {
    if label.contains('◇') {
        format!("({label})")
    } else {
        label.to_owned()
    }
}

pub fn compose(left: &Opinion, right: &Opinion, symbol: &str) -> Option<String> {
    if left.owner().is_none() && right.owner().is_none() {
        return None;
    }
    let l = left.owner().map_or_else(|| "_".to_owned(), wrap);
    let r = right.owner().map_or_else(|| "_".to_owned(), wrap);
    Some(format!("{l}{symbol}{r}"))
}
