//! Regenerates the bundled data files from the built-in tables.

use ricci::data::{cases_to_json, end_forms_to_json, END_FORMS_FILE, PATTERNS_FILE};
use ricci_core::families::end_form_catalog;
use ricci_core::patterns::builtin_cases;

fn main() -> std::io::Result<()> {
    let dir = std::env::args().nth(1).unwrap_or_else(|| concat!(env!("CARGO_MANIFEST_DIR"), "/data").into());
    let dir = std::path::Path::new(&dir);
    std::fs::write(dir.join(END_FORMS_FILE), end_forms_to_json(&end_form_catalog()))?;
    std::fs::write(dir.join(PATTERNS_FILE), cases_to_json(&builtin_cases()))?;
    Ok(())
}
