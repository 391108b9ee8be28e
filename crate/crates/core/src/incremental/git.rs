use std::io::{BufRead, BufReader, Read, Write};
use std::path::{Path, PathBuf};
use std::process::{Command, Stdio};

use super::history::{HistoryError, HistoryProvider};
use super::ChangedFiles;

/// History provider backed by the `git` executable.
#[derive(Clone, Debug)]
pub struct GitProvider {
    repo: PathBuf,
}

impl GitProvider {
    pub fn new(repo: impl AsRef<Path>) -> Self {
        GitProvider {
            repo: repo.as_ref().to_path_buf(),
        }
    }

    fn command(&self) -> Command {
        let mut cmd = Command::new("git");
        cmd.arg("-C").arg(&self.repo);
        cmd
    }

    fn run(&self, args: &[&str]) -> Result<Vec<u8>, HistoryError> {
        let out = self
            .command()
            .args(args)
            .output()
            .map_err(|e| git_error(args, e.to_string()))?;
        if !out.status.success() {
            return Err(git_error(
                args,
                String::from_utf8_lossy(&out.stderr).trim().to_owned(),
            ));
        }
        Ok(out.stdout)
    }
}

fn git_error(args: &[&str], message: String) -> HistoryError {
    HistoryError::Git {
        command: args.join(" "),
        message,
    }
}

fn nul_split(bytes: &[u8]) -> impl Iterator<Item = String> + '_ {
    bytes
        .split(|&b| b == 0)
        .filter(|s| !s.is_empty())
        .map(|s| String::from_utf8_lossy(s).into_owned())
}

impl HistoryProvider for GitProvider {
    fn commits(&self, branch: &str) -> Result<Vec<String>, HistoryError> {
        let out = self.run(&["rev-list", "--first-parent", "--reverse", branch, "--"])?;
        Ok(String::from_utf8_lossy(&out)
            .lines()
            .map(str::to_owned)
            .collect())
    }

    fn list_files(&self, commit: &str) -> Result<Vec<String>, HistoryError> {
        let out = self.run(&["ls-tree", "-r", "-z", "--name-only", commit])?;
        Ok(nul_split(&out).collect())
    }

    fn changed_paths(&self, from: &str, to: &str) -> Result<ChangedFiles, HistoryError> {
        let out = self.run(&["diff", "--name-status", "--no-renames", "-z", from, to])?;
        let mut changes = ChangedFiles::default();
        let mut fields = nul_split(&out);
        while let (Some(status), Some(path)) = (fields.next(), fields.next()) {
            match status.as_bytes().first() {
                Some(b'A') => changes.added.insert(path),
                Some(b'D') => changes.deleted.insert(path),
                _ => changes.modified.insert(path),
            };
        }
        Ok(changes)
    }

    fn read_files(&self, commit: &str, paths: &[String]) -> Result<Vec<(String, Vec<u8>)>, HistoryError> {
        if paths.is_empty() {
            return Ok(Vec::new());
        }
        let args = ["cat-file", "--batch"];
        let mut child = self
            .command()
            .args(args)
            .stdin(Stdio::piped())
            .stdout(Stdio::piped())
            .stderr(Stdio::null())
            .spawn()
            .map_err(|e| git_error(&args, e.to_string()))?;
        let mut stdin = child.stdin.take().expect("piped stdin");
        let requests: String = paths.iter().map(|p| format!("{commit}:{p}\n")).collect();
        let writer = std::thread::spawn(move || stdin.write_all(requests.as_bytes()));

        let mut out = BufReader::new(child.stdout.take().expect("piped stdout"));
        let mut files = Vec::with_capacity(paths.len());
        let mut header = String::new();
        for path in paths {
            header.clear();
            out.read_line(&mut header)
                .map_err(|e| git_error(&args, e.to_string()))?;
            let size = header
                .trim_end()
                .rsplit(' ')
                .next()
                .and_then(|s| s.parse::<usize>().ok())
                .filter(|_| !header.trim_end().ends_with("missing"))
                .ok_or_else(|| git_error(&args, format!("{commit}:{path}: {}", header.trim())))?;
            let mut bytes = vec![0; size + 1];
            out.read_exact(&mut bytes)
                .map_err(|e| git_error(&args, e.to_string()))?;
            bytes.pop();
            files.push((path.clone(), bytes));
        }
        let _ = writer.join();
        let _ = child.wait();
        Ok(files)
    }
}
