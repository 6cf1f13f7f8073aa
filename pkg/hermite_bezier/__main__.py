from hermite_bezier.main import main

main()
