//! All-or-nothing file output: every file is staged in a temporary file in
//! the target directory and renamed into place only once all are written.

use std::io::{self, Write};
use std::path::{Path, PathBuf};

use tempfile::NamedTempFile;

/// Writes `files` (name, contents) into `dir`, creating it if needed.
/// On error no new file is left behind; files already renamed into place
/// during a failed commit are removed again.
pub fn write_atomically(dir: &Path, files: &[(&str, &[u8])]) -> io::Result<Vec<PathBuf>> {
    std::fs::create_dir_all(dir)?;
    let mut staged = Vec::with_capacity(files.len());
    for (name, contents) in files {
        let mut tmp = NamedTempFile::new_in(dir)?;
        tmp.write_all(contents)?;
        tmp.as_file().sync_all()?;
        staged.push((dir.join(name), tmp));
    }
    let mut written = Vec::with_capacity(staged.len());
    for (path, tmp) in staged {
        match tmp.persist(&path) {
            Ok(_) => written.push(path),
            Err(e) => {
                for p in &written {
                    let _ = std::fs::remove_file(p);
                }
                return Err(e.error);
            }
        }
    }
    Ok(written)
}
