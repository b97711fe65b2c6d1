//! Path handling where `-` means standard input or output.

use std::fs::File;
use std::io::{self, BufRead, BufReader, BufWriter, Write};
use std::path::Path;

use hyperpa::io::IoError;

use crate::error::CliError;

pub fn open_input(path: &str) -> Result<Box<dyn BufRead>, CliError> {
    if path == "-" {
        return Ok(Box::new(BufReader::new(io::stdin().lock())));
    }
    File::open(path)
        .map(|f| Box::new(BufReader::new(f)) as Box<dyn BufRead>)
        .map_err(|e| CliError::Input {
            path: path.to_string(),
            source: IoError::Io(e),
        })
}

pub fn input_error(path: &str) -> impl FnOnce(IoError) -> CliError + '_ {
    move |source| CliError::Input {
        path: path.to_string(),
        source,
    }
}

pub fn output_error(path: &str) -> impl FnOnce(io::Error) -> CliError + '_ {
    move |source| CliError::Output {
        path: path.to_string(),
        source,
    }
}

/// Opens `path` for writing and runs `write` against it.
pub fn with_output<F>(path: &str, write: F) -> Result<(), CliError>
where
    F: FnOnce(&mut dyn Write) -> io::Result<()>,
{
    let result = if path == "-" {
        let mut out = BufWriter::new(io::stdout().lock());
        write(&mut out).and_then(|_| out.flush())
    } else {
        File::create(path).and_then(|f| {
            let mut out = BufWriter::new(f);
            write(&mut out).and_then(|_| out.flush())
        })
    };
    result.map_err(output_error(path))
}

/// `runs/h.txt` with index 3 becomes `runs/h.3.txt`.
pub fn indexed_path(path: &str, index: u64) -> String {
    let p = Path::new(path);
    let stem = p.file_stem().and_then(|s| s.to_str()).unwrap_or("");
    let name = match p.extension().and_then(|e| e.to_str()) {
        Some(ext) => format!("{stem}.{index}.{ext}"),
        None => format!("{stem}.{index}"),
    };
    p.with_file_name(name).to_string_lossy().into_owned()
}
