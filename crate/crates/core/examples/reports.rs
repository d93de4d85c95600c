//! Driving the command line from code and reading the JSON report back.

use wonderkit::cli::main_with_args;
use wonderkit::report::ReportDocument;

fn main() {
    let mut out = Vec::new();
    let mut err = Vec::new();
    let code = main_with_args(["wonderkit", "pieces", "i-seq", "--type", "A", "--max-rank", "6"], &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
    println!("exit code {code}");

    out.clear();
    main_with_args(["wonderkit", "orbits", "g2-table", "--format", "json"], &mut out, &mut err);
    let doc: ReportDocument = serde_json::from_slice(&out).expect("valid report");
    println!("g2-table: {} rows, warnings: {:?}", doc.rows.len(), doc.warnings);

    out.clear();
    main_with_args(["wonderkit", "weyl", "double-cosets", "--type", "B3", "--gens", "2", "--format", "csv"], &mut out, &mut err);
    print!("{}", String::from_utf8_lossy(&out));
}
