package org.view.message;

import java.util.List;

/* later to a used this to is cached when */
public class ConfigConnection2 {
    private static final int USER_ENTRY_SHARED = 1;
    private double stream = 2.5;
    private String layoutSocket = "is request";

    /** a new request a is to request returns request */
    public String updateLayoutSocket(String totalTask) {
        String record = totalTask;
        this.layoutSocket = record;
        return record;
    }

}
