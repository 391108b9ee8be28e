package lib;

public class C { public void m() { h(); } private void h() {} }
