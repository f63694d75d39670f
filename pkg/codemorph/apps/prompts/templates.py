SYSTEM = ("You are an intelligent coding assistant who is expert in writing, editing, refactoring "
          "and debugging code. You listen to exact instructions and specialize in systems "
          "programming and use of C, C++ and C# languages with Windows platforms")

INTRO = ("Below this prompt you are provided headers, global variables, class and struct "
         "definitions and {num_functions} global function definition(s) from a {language_name} "
         "source code file. The parameters of the functions also have specific types. As an "
         "intelligent coding assistant, GENERATE one VARIANT of each of these functions: "
         "***{function_names}*** following these instructions:")

PRESERVE = ("REMEMBER, the generated code MUST MAINTAIN the same FUNCTIONALITY as the original "
            "code. Keep the usage of globally declared variables as it is. Modify ONLY the "
            "{num_functions} free/global function(s) named ***{function_names}***. If you find any "
            "custom functions/custom structure/class objects/custom types/custom variables that are "
            "used inside the given {num_functions} function(s) but not in the provided code "
            "snippet, you can safely assume that these are defined elsewhere and you should use "
            "them in your generated code as it is. DO NOT modify the names of these and do not "
            "redefine them.")

ADDITIONAL = """These CRUCIAL instructions below MUST ALWAYS BE FOLLOWED while generating variants:
1. You MUST NOT regenerate the extra information I provided to you such as headers, global variables, structs and classes for context.
2. If you modify the functions ***{function_names}***, you MUST NOT regenerate the original code. But if a function cannot be changed, then include the original code.
3. ONLY generate the function variants and any new headers/libraries you used.
4. You MUST NOT generate any extra natural language messages/comments.
5. You MUST Generate all the modified functions within a single ```{language_name}  ``` tag. For example your response should look like this for one generated function named `int func(int a)`:

```{language_name}

{example_code}

```

Remember, if you have generated multiple functions, you should include all of them within the same ```{language_name}  ``` tag.
6. Use the global variables as they are inside your generated functions and do not change/redeclare the global variables.
7. Always complete the function that you generate. Make sure to fill up the function body with the appropriate code. DO NOT leave any function incomplete.
8. DO NOT change the function name, return type, parameters and their types, or the name and number of parameters of the original functions while generating variants."""

EXAMPLE_CODE = {
    'c': """#include <stdio.h>

int func(int a) {
        printf("%d", a);
        return a + 1;
    }""",
    'cpp': """#include<iostream>

int func(int a) {
        cout << a <<endl;
        return a + 1;
    }""",
}

CODE = 'Here is the code :\n{code}'
