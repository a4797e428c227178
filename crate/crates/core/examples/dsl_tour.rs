use twonorm::dsl::{eval, Ast};

fn main() {
    let env = [("n", 4.0), ("x1", 3.0), ("x2", -1.0)];
    for src in [
        "sqrt(n) + 1/n",
        "-2^2",
        "2^3^2",
        "(x1^2, abs(x2), max(x1, x2, 0))",
        "sign(x1 - 3) * sin(0)",
        "1e-3 * n",
        "2n",
        "(1, (2, 3))",
    ] {
        match Ast::parse(src) {
            Ok(ast) => {
                let value = eval(&ast, &env).map(|v| format!("{v:?}")).unwrap_or_else(|e| e.to_string());
                println!("{src:<34} {:<40} {value}", ast.to_sexpr());
                // printing reparses to the same tree
                assert_eq!(Ast::parse(&ast.to_string()).unwrap(), ast);
            }
            Err(e) => println!("{src:<34} error: {e}"),
        }
    }
}
