//! Writing a builtin to a group file, reading it back, and driving the
//! command line from code.

use ordtype::cli::{execute, read_group_file, write_group_file};
use ordtype::constructions::quaternion8;

fn main() -> ordtype::Result<()> {
    let dir = tempfile::tempdir().expect("temporary directory");
    let path = dir.path().join("q8.txt");
    write_group_file(&path, &quaternion8()?)?;
    print!("{}", std::fs::read_to_string(&path).expect("just written"));
    println!("read back: order {}", read_group_file(&path)?.order());

    let file = path.to_string_lossy().into_owned();
    let out = execute(["ordtype", "order-type", "--builtin", "D8", "--file", &file]);
    print!("{}", out.text);
    println!("exit code {}", out.exit_code);
    println!("{}", out.report.to_json());
    Ok(())
}
